/*
   Copyright 2026 The mellin-calculus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "mellin/complex_gamma.hpp"

#include <cmath>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's set).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  const double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

// Valid for Re(z) >= 1/2.
Complex log_gamma_lanczos(Complex z) {
  Complex sum = kLanczos[0];
  for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z + double(k - 1));
  const Complex t = z + (kLanczosG - 0.5);
  return (z - 0.5) * std::log(t) - t + kHalfLog2Pi + std::log(sum);
}

}  // namespace

Complex sin_pi(Complex z) {
  // Reduce the real part; sin is 2-periodic in x/pi units.
  double x = z.real();
  x -= 2.0 * std::floor(0.5 * x);
  const double y = z.imag();
  return {std::sin(M_PI * x) * std::cosh(M_PI * y),
          std::cos(M_PI * x) * std::sinh(M_PI * y)};
}

Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  if (std::abs(y) < 20.0) return std::log(sin_pi(z));
  // For large |Im z| one exponential dominates:
  //   sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}),   Im z > 0.
  if (y > 0.0) {
    const Complex i(0.0, 1.0);
    return -i * M_PI * z + std::log(Complex(0.0, 0.5)) +
           std::log(1.0 - std::exp(2.0 * i * M_PI * z));
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw precondition_error("gamma: pole at nonpositive integer argument");
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::log(M_PI) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex gamma_ratio(Complex a, Complex b) {
  return std::exp(log_gamma(a) - log_gamma(b));
}

}  // namespace mellin
