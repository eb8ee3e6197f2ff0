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

#include <functional>

#include "mellin/quadrature.hpp"

namespace mellin {

/// Order of a Mittag-Leffler function/distribution, constrained to (0, 1].
struct MLOrder {
  double nu;

  explicit MLOrder(double order);
};

/// Lollipop-shaped contour around the negative real axis: two rays just
/// below/above the axis from -cutoff to -radius, closed by a circle of the
/// given radius around the origin.  The branch of log(zeta) is fixed to
/// arg = -pi on the lower ray and +pi on the upper ray.
struct HankelContour {
  double radius = 1.0;
  double cutoff = 41.0;
  int steps_ray = 2000;
  int steps_arc = 400;

  void validate() const;

  /// A contour adapted to evaluating E_nu at argument u: keeps u away from
  /// the zero set H0 of the integrand denominator while bounding the circle
  /// radius (large radii lose precision to cancellation on the arc).
  static HankelContour for_argument(double nu, Complex u);

  /// A contour adapted to 1/Gamma(z): circle radius near |z| passes through
  /// the saddle of e^zeta zeta^{-z}, which keeps the integrand at the scale
  /// of the result instead of e^{pi |Im z|} above it.
  static HankelContour for_reciprocal_gamma(Complex z);
};

struct HankelStatus {
  double tail_magnitude = 0.0;  // |integrand| at the truncated ray end
  bool tail_warning = false;
};

/// Contour integral (1/2 pi i) \oint_H f(zeta) dzeta.  The callable receives
/// zeta together with log(zeta) on the contour's branch, so integrands
/// involving powers of zeta stay on the documented branch.
Complex hankel_integrate(
    const HankelContour& contour,
    const std::function<Complex(Complex zeta, Complex log_zeta)>& f,
    HankelStatus* status = nullptr);

/// 1/Gamma(z) as the Hankel integral (1/2 pi i) \oint e^zeta zeta^{-z} dzeta.
Complex recip_gamma_hankel(Complex z, const HankelContour& contour,
                           HankelStatus* status = nullptr);

/// Same, on the saddle-matched contour for_reciprocal_gamma(z).
Complex recip_gamma_hankel(Complex z, HankelStatus* status = nullptr);

/// E_nu(u) = sum_k (-u)^k / Gamma(nu k + 1) by direct summation.  Truncates
/// once two consecutive terms fall below tol * |partial sum|.  Throws
/// series_overflow_error when double precision cannot deliver tol (the peak
/// term times machine epsilon exceeds the tolerance) or a term overflows;
/// callers should then switch to mittag_leffler_hankel.
Complex mittag_leffler_series(MLOrder nu, Complex u, double tol = 1e-12);

/// E_nu(u) = (1/2 pi i) \int_H e^zeta / (zeta + u zeta^{1-nu}) dzeta.
/// Valid for u off the zero set H0(radius) of the denominator; arguments
/// within distance 0.05 of H0 are rejected.  When the denominator's branch
/// pole zeta* = (-u)^{1/nu} falls outside the circle, its residue is added
/// explicitly (the analytic continuation across H0's inner ring), so the
/// result equals E_nu on the whole accepted domain.
Complex mittag_leffler_hankel(MLOrder nu, Complex u,
                              const HankelContour& contour = {},
                              HankelStatus* status = nullptr);

/// Distance from u to the denominator zero set H0 = {-zeta^nu : zeta in H}:
/// two rays at angles -/+ pi(1-nu) with radii [radius^nu, cutoff^nu] plus the
/// circle arc of radius radius^nu spanning the remaining angles.
double distance_to_ml_singular_set(double nu, Complex u,
                                   const HankelContour& contour);

}  // namespace mellin
