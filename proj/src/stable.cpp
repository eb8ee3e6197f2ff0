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
#include "mellin/stable.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/complex_gamma.hpp"
#include "mellin/errors.hpp"
#include "mellin/mellin_transform.hpp"

namespace mellin {

StableParams::StableParams(double a, double t) : alpha(a), theta(t) {
  if (!(a > 0.0) || a > 2.0)
    throw precondition_error("StableParams: alpha must lie in (0, 2]");
  if (std::abs(t) > std::min(a, 2.0 - a) + 1e-15)
    throw precondition_error(
        "StableParams: |theta| must not exceed min(alpha, 2 - alpha)");
  if (a == 1.0 && t != 0.0)
    throw precondition_error(
        "StableParams: the asymmetric alpha = 1 case is excluded");
  rho_plus = (a - t) / (2.0 * a);
  rho_minus = (a + t) / (2.0 * a);
}

Complex StableParams::fourier(double y) const {
  const double s = y >= 0.0 ? 1.0 : -1.0;
  const Complex zeta = std::polar(1.0, 0.5 * M_PI * theta * s);
  return std::exp(-std::pow(std::abs(y), alpha) * zeta);
}

Complex stable_mellin(const StableParams& p, Complex s, Side side) {
  const double rho = side == Side::plus ? p.rho_plus : p.rho_minus;
  if (rho == 0.0) return 0.0;
  const Complex w = 1.0 - s;
  return rho * std::exp(log_gamma(s) + log_gamma(1.0 + w / p.alpha) -
                        log_gamma(1.0 + rho * w) - log_gamma(1.0 - rho * w));
}

std::pair<Complex, Complex> stable_mellin_numeric(const StableParams& p,
                                                  double s) {
  if (!(s > 0.0 && s < 1.0))
    throw precondition_error("stable_mellin_numeric: s must lie in (0, 1)");
  // |psi*(y)| = exp(-y^alpha cos(pi theta/2)); truncate at e^{-42}.
  const double c = std::cos(0.5 * M_PI * p.theta);
  const double upper = std::pow(45.0 / c, 1.0 / p.alpha);
  ComplexFunction fstar{[&p](Complex y) { return p.fourier(y.real()); },
                        "stable characteristic function"};
  return mellin_from_fourier(fstar, s, upper, 6000);
}

BromwichLine stable_inversion_line(const StableParams& p) {
  const double rho_max = std::max(p.rho_plus, p.rho_minus);
  const double rate = 0.5 * M_PI * (1.0 + 1.0 / p.alpha - 2.0 * rho_max);
  BromwichLine line;
  line.half_height = std::min(std::max(32.0 / std::max(rate, 0.05), 60.0), 800.0);
  line.steps = int(line.half_height / 0.02);
  return line;
}

double stable_density(const StableParams& p, double x, double gamma,
                      const BromwichLine& line, QuadStatus* status) {
  if (x == 0.0)
    throw precondition_error("stable_density: x must be nonzero");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw precondition_error("stable_density: gamma must lie in (0, 1)");
  const Side side = x > 0.0 ? Side::plus : Side::minus;
  const double ax = std::abs(x);
  ComplexFunction integrand{
      [&p, side, ax](Complex s) {
        return stable_mellin(p, s, side) * std::exp(-s * std::log(ax));
      },
      "stable Mellin-Barnes integrand"};
  const double value =
      integrate_bromwich(integrand, line.with_abscissa(gamma), status).real();
  if (value < -1e-8)
    throw numerics_error("stable_density: negative density beyond tolerance");
  return value;
}

double stable_tail_mass(const StableParams& p, double x, Side side,
                        int terms) {
  if (!(x > 0.0)) throw precondition_error("stable_tail_mass: x must be > 0");
  if (p.alpha == 2.0) return 0.0;
  const double rho = side == Side::plus ? p.rho_plus : p.rho_minus;
  double mass = 0.0, sign = 1.0, kfact = 1.0;
  for (int k = 1; k <= terms; ++k) {
    kfact *= k;
    mass += sign * std::tgamma(1.0 + k * p.alpha) *
            std::sin(M_PI * k * rho * p.alpha) /
            (M_PI * kfact * k * p.alpha) * std::pow(x, -k * p.alpha);
    sign = -sign;
  }
  return mass;
}

}  // namespace mellin
