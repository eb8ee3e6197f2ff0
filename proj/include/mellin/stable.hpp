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

#include <utility>

#include "mellin/contour.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

/// Stable law with Fourier transform exp(-|y|^alpha e^{i pi theta sgn(y)/2}).
/// rho_plus/rho_minus = (alpha -/+ theta) / (2 alpha) are the masses carried
/// by each half-line and must be probabilities, which bounds
/// |theta| <= min(alpha, 2 - alpha).  The asymmetric alpha = 1 case is
/// excluded (degenerate parametrization).
struct StableParams {
  double alpha;
  double theta;
  double rho_plus;
  double rho_minus;

  StableParams(double a, double t);

  /// Fourier transform value at real y.
  Complex fourier(double y) const;
};

/// Closed-form Mellin transform of the requested half of the stable density:
///   M psi+-(s) = rho Gamma(s) Gamma(1 + (1-s)/alpha)
///                / [Gamma(1 + rho(1-s)) Gamma(1 - rho(1-s))].
Complex stable_mellin(const StableParams& p, Complex s, Side side);

/// The same transform pair computed independently through the Theorem-4
/// Fourier bridge (numerical y-quadrature of psi*), for 0 < s < 1.
std::pair<Complex, Complex> stable_mellin_numeric(const StableParams& p,
                                                  double s);

/// Density at x != 0 by Mellin-Barnes inversion of the closed form.
double stable_density(const StableParams& p, double x, double gamma,
                      const BromwichLine& line, QuadStatus* status = nullptr);

/// A Bromwich line adapted to the closed form's decay
/// exp(-(pi/2)(1 + 1/alpha - 2 max(rho)) |t|) along vertical lines.
BromwichLine stable_inversion_line(const StableParams& p);

/// Mass in the tail (X, inf) of the chosen side, from the Mellin-Barnes pole
/// expansion:  sum_k (-1)^{k-1} Gamma(1 + k alpha) sin(pi k rho alpha)
///                   / (pi k! k alpha) * X^{-k alpha}.
/// Zero for alpha = 2.  Used to close total-mass checks truncated at |x|<=X.
double stable_tail_mass(const StableParams& p, double x, Side side,
                        int terms = 4);

}  // namespace mellin
