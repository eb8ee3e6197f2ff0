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
// Test-side oracles, independent of the library's quadrature engines.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

// Adaptive Simpson on [a, b]; shares no code with the library integrators.
inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Gamma(1/2) as the quadrature 2 int_0^inf e^{-t^2} dt (substituted form of
// int_0^inf e^{-x} x^{-1/2} dx).
inline double gamma_half_by_quadrature() {
  return 2.0 * integrate([](double t) { return std::exp(-t * t); }, 0.0, 9.0);
}

// E_nu(u) for large u from the tail expansion
//   sum_{k>=1} (-1)^{k+1} u^{-k} / Gamma(1 - nu k),
// truncated at the globally smallest term.  Returns the value and a crude
// error estimate combining the omitted term and accumulated roundoff.
struct AsymptoticML {
  double value;
  double error_estimate;
};
inline AsymptoticML ml_asymptotic(double nu, double u) {
  std::vector<double> terms;
  double abs_sum = 0.0;
  for (int k = 1; k < 400; ++k) {
    const double a = 1.0 - nu * k;
    double rg;  // 1/Gamma(a) via reflection, zero at the poles
    if (a > 0.0) {
      rg = 1.0 / std::tgamma(a);
    } else if (a == std::floor(a)) {
      rg = 0.0;
    } else {
      rg = std::sin(M_PI * a) * std::tgamma(1.0 - a) / M_PI;
    }
    const double t = (k % 2 ? 1.0 : -1.0) * std::pow(u, -k) * rg;
    terms.push_back(t);
    abs_sum += std::abs(t);
    if (std::abs(t) < 1e-280) break;
  }
  size_t best = 0;
  double smallest = 1e300;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] != 0.0 && std::abs(terms[i]) < smallest) {
      smallest = std::abs(terms[i]);
      best = i;
    }
  }
  double s = 0.0;
  for (size_t i = 0; i < best; ++i) s += terms[i];
  return {s, smallest + 64.0 * abs_sum * 2.22e-16};
}

// Frozen high-precision references (documented oracle: 120-digit summation of
// the defining series).
struct MLReference {
  double nu, u, value;
};
inline const std::vector<MLReference>& ml_deep_references() {
  static const std::vector<MLReference> refs = {
      {0.3, 2.5, 0.244983123794786943}, {0.3, 3.0, 0.21180263319643578},
      {0.3, 3.5, 0.186465509524011978}, {0.3, 4.0, 0.166501744315516648},
      {0.3, 4.5, 0.150374905688776735}, {0.3, 5.0, 0.137080869020270638},
  };
  return refs;
}

inline constexpr double kGammaHalf = 1.7724538509055160273;
inline constexpr double kRecipGammaHalf = 0.56418958354775628695;
inline constexpr double kML05at1 = 0.42758357615580700441;  // e * erfc(1)
inline constexpr double kML07atHalf = 0.605147592059564271;

}  // namespace oracle
