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
#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace mellin {

using Complex = std::complex<double>;

/// Open interval of the real line, used for fundamental strips and
/// bracketing intervals.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x > lo && x < hi; }
  bool empty() const { return !(lo < hi); }
};

/// Which half-line component of a two-sided transform pair.
enum class Side { plus, minus };

/// Gauss-Legendre nodes and weights on [-1, 1].  Computed once per order by
/// Newton iteration on the Legendre recurrence and cached.
const std::vector<std::pair<double, double>>& gauss_legendre(int order);

/// Integrates f over [a, b] with `panels` panels of 16-point Gauss-Legendre.
template <typename F>
Complex integrate_gl_panels(F&& f, double a, double b, int panels) {
  const auto& rule = gauss_legendre(16);
  Complex total = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    Complex acc = 0.0;
    for (const auto& [x, w] : rule) acc += w * f(mid + 0.5 * h * x);
    total += 0.5 * h * acc;
  }
  return total;
}

/// Composite trapezoid on [a, b] with `steps` intervals.
template <typename F>
Complex trapezoid(F&& f, double a, double b, int steps) {
  const double h = (b - a) / steps;
  Complex acc = 0.5 * (f(a) + f(b));
  for (int j = 1; j < steps; ++j) acc += f(a + j * h);
  return acc * h;
}

/// Polynomial extrapolation of y(x) to x = 0 by Neville's tableau.
/// Returns the extrapolated value and the magnitude of the last correction,
/// which serves as the error estimate.
struct Extrapolated {
  Complex value;
  double error_estimate;
};
Extrapolated neville_to_zero(const std::vector<double>& xs,
                             const std::vector<Complex>& ys);

}  // namespace mellin
