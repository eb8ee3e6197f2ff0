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
#include "mellin/contour.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

Complex regularizer(Complex s, double eps) {
  if (eps <= 0.0) return 1.0;
  return std::exp(M_PI * eps * eps * s * s);
}

}  // namespace

void BromwichLine::validate() const {
  if (!(half_height > 0.0))
    throw precondition_error("BromwichLine: half_height must be > 0");
  if (steps < 64) throw precondition_error("BromwichLine: steps must be >= 64");
  if (regularizer_eps < 0.0)
    throw precondition_error("BromwichLine: regularizer_eps must be >= 0");
}

Complex integrate_bromwich(const ComplexFunction& f, const BromwichLine& line,
                           QuadStatus* status) {
  line.validate();
  const double gamma = line.abscissa;
  const double eps = line.regularizer_eps;
  auto g = [&](double t) -> Complex {
    const Complex s(gamma, t);
    return f(s) * regularizer(s, eps);
  };

  Complex acc = trapezoid(g, -line.half_height, line.half_height, line.steps);

  double outer = line.half_height;
  if (line.tail_cutoff > line.half_height && line.tail_steps >= 16) {
    // t = e^w on each side; the integrand must be smooth and monotone-ish
    // out there, which holds for the power-decay transforms in this library.
    // Panels, not trapezoid: the integrand is finite at the junction.
    const double w0 = std::log(line.half_height);
    const double w1 = std::log(line.tail_cutoff);
    auto tail = [&](double sign) {
      return integrate_gl_panels(
          [&](double w) {
            const double t = std::exp(w);
            return g(sign * t) * t;
          },
          w0, w1, std::max(8, line.tail_steps / 16));
    };
    acc += tail(1.0) + tail(-1.0);
    outer = line.tail_cutoff;
  }

  const Complex result = acc / (2.0 * M_PI);  // (1/2 pi i) * (i dt)
  if (status) {
    status->tail_magnitude = std::abs(g(outer));
    status->tail_warning =
        status->tail_magnitude > 1e-3 * std::max(std::abs(result), 1e-300);
  }
  return result;
}

Extrapolated extrapolate_regularizer(const ComplexFunction& f,
                                     const BromwichLine& line,
                                     const std::vector<double>& eps_sequence) {
  if (eps_sequence.size() < 2)
    throw precondition_error("extrapolate_regularizer: need >= 2 eps values");
  for (size_t i = 0; i < eps_sequence.size(); ++i) {
    if (eps_sequence[i] < 1e-4)
      throw precondition_error("extrapolate_regularizer: eps must stay >= 1e-4");
    if (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1]))
      throw precondition_error(
          "extrapolate_regularizer: eps sequence must be strictly decreasing");
  }
  std::vector<Complex> values;
  values.reserve(eps_sequence.size());
  for (double eps : eps_sequence) {
    values.push_back(integrate_bromwich(f, line.with_eps(eps)));
    const size_t n = values.size();
    if (n >= 3) {
      const double d1 = std::abs(values[n - 1] - values[n - 2]);
      const double d0 = std::abs(values[n - 2] - values[n - 3]);
      const double scale = std::max(std::abs(values[n - 1]), 1e-300);
      if (d1 > 10.0 * d0 && d1 > 1e-9 * scale)
        throw numerics_error(
            "extrapolate_regularizer: values diverge along the eps sequence");
    }
  }
  // The Gaussian mollifier contributes even powers of eps, but slowly
  // decaying transforms add an odd/fractional leading term; extrapolate in
  // both eps and eps^2 and keep the tableau that settled better.
  std::vector<double> squared(eps_sequence);
  for (double& x : squared) x *= x;
  const Extrapolated in_eps = neville_to_zero(eps_sequence, values);
  const Extrapolated in_eps2 = neville_to_zero(squared, values);
  return in_eps2.error_estimate < in_eps.error_estimate ? in_eps2 : in_eps;
}

Complex integrate_halfline(const ComplexFunction& f, Complex power,
                           double upper, int steps) {
  if (!(power.real() < 1.0))
    throw precondition_error(
        "integrate_halfline: Re(power) >= 1 makes y^-power non-integrable at 0");
  if (!(upper > 0.0) || steps < 16)
    throw precondition_error("integrate_halfline: invalid upper/steps");
  const double decay = 1.0 - power.real();
  const double x_lo = -std::min(42.0 / decay, 900.0);
  const double x_hi = std::log(upper);
  // Gauss-Legendre panels: the integrand need not vanish at the upper end
  // (support edges), where the trapezoid rule would drop to O(h^2).
  return integrate_gl_panels(
      [&](double x) {
        const double y = std::exp(x);
        return f(Complex(y, 0.0)) * std::exp((1.0 - power) * x);
      },
      x_lo, x_hi, std::max(8, steps / 16));
}

Extrapolated halfline_oscillatory(const ComplexFunction& f, Complex power,
                                  const std::vector<double>& eta_sequence) {
  if (!(power.real() < 1.0))
    throw precondition_error("halfline_oscillatory: Re(power) must be < 1");
  if (eta_sequence.size() < 3)
    throw precondition_error("halfline_oscillatory: need >= 3 eta values");
  const double decay = 1.0 - power.real();
  const double x_lo = -std::min(42.0 / decay, 900.0);
  std::vector<Complex> values;
  values.reserve(eta_sequence.size());
  for (double eta : eta_sequence) {
    if (!(eta > 0.0))
      throw precondition_error("halfline_oscillatory: eta must be > 0");
    // Head (0, 1]: graded mesh handles y^{-power}; the damping is gentle here.
    const Complex head = integrate_gl_panels(
        [&](double x) {
          const double y = std::exp(x);
          return f(Complex(y, 0.0)) * std::exp(-eta * y) *
                 std::exp((1.0 - power) * x);
        },
        x_lo, 0.0, std::max(80, int(-x_lo / 2)));
    // Damped tail [1, 36/eta]: unit-length Gauss-Legendre panels resolve
    // e^{+-iy}-type oscillation.
    const double upper = 36.0 / eta;
    const int panels = std::max(32, int(upper));
    const Complex tail = integrate_gl_panels(
        [&](double y) {
          return f(Complex(y, 0.0)) * std::exp(-eta * y) *
                 std::pow(y, -power);
        },
        1.0, upper, panels);
    values.push_back(head + tail);
  }
  return neville_to_zero(eta_sequence, values);
}

std::vector<double> default_eta_sequence() {
  std::vector<double> etas;
  double eta = 0.35;
  for (int j = 0; j < 10; ++j, eta *= 0.8) etas.push_back(eta);
  return etas;
}

std::vector<double> default_eps_sequence() {
  return {0.06, 0.045, 0.034, 0.026, 0.02};
}

}  // namespace mellin
