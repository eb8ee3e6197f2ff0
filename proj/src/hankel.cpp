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
#include "mellin/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

constexpr double kExclusionDistance = 0.05;  // delta around H0

double clamp(double x, double lo, double hi) {
  return std::min(std::max(x, lo), hi);
}

double distance_to_origin_ray(Complex u, double angle, double r0, double r1) {
  const Complex dir = std::polar(1.0, angle);
  const double t = clamp((u * std::conj(dir)).real(), r0, r1);
  return std::abs(u - t * dir);
}

}  // namespace

MLOrder::MLOrder(double order) : nu(order) {
  if (!(order > 0.0) || order > 1.0)
    throw precondition_error("MLOrder: nu must lie in (0, 1]");
}

void HankelContour::validate() const {
  if (!(radius > 0.0)) throw precondition_error("HankelContour: radius must be > 0");
  if (!(cutoff > radius))
    throw precondition_error("HankelContour: cutoff must exceed radius");
  if (steps_ray < 16 || steps_arc < 16)
    throw precondition_error("HankelContour: step counts must be >= 16");
}

HankelContour HankelContour::for_reciprocal_gamma(Complex z) {
  HankelContour c;
  c.radius = std::min(std::max(std::abs(z), 1.0), 60.0);
  c.cutoff = c.radius + 42.0;
  c.steps_ray = 2400;
  c.steps_arc = std::max(400, int(40.0 * std::abs(z)));
  return c;
}

HankelContour HankelContour::for_argument(double nu, Complex u) {
  HankelContour c;
  const double mag = std::abs(u);
  if (nu > 0.97) {
    // The H0 rays collapse onto the positive axis; push the circle past |u|
    // so real arguments sit inside it.  e^radius stays small enough that the
    // arc does not lose precision to cancellation.
    c.radius = std::max(2.0, 1.4 * mag + 0.6);
  } else if (mag > 0.7) {
    // Shrink the circle so |u| clears the ring radius^nu by a wide margin.
    c.radius = std::min(1.0, std::pow(0.45 * mag, 1.0 / nu));
    c.radius = std::max(c.radius, 1e-3);
  }
  c.cutoff = c.radius + 42.0;
  return c;
}

Complex hankel_integrate(
    const HankelContour& contour,
    const std::function<Complex(Complex, Complex)>& f, HankelStatus* status) {
  contour.validate();
  const double eps = contour.radius;

  // Rays, oriented in -> out below the axis and out -> in above it:
  //   sum = int_radius^cutoff [f(-r; log = ln r - i pi) - f(-r; ln r + i pi)] dr.
  // Substituting r = radius + e^tau clusters nodes at the circle junction and
  // makes the trapezoid rule spectrally accurate (the integrand decays
  // exponentially at both tau ends).
  const double tau_hi = std::log(contour.cutoff - eps);
  auto ray_diff = [&](double tau) -> Complex {
    const double r = eps + std::exp(tau);
    const double lr = std::log(r);
    const Complex lower = f(Complex(-r, 0.0), Complex(lr, -M_PI));
    const Complex upper = f(Complex(-r, 0.0), Complex(lr, M_PI));
    return (lower - upper) * std::exp(tau);
  };
  // The truncation depth must track the integrand size at the circle
  // junction (branch factors like zeta^{-z} reach e^{pi |Im z|} there), so
  // integrate, test the residual against the result, and deepen if needed.
  double tau_lo = -44.0;
  Complex rays = 0.0;
  for (int pass = 0; pass < 3; ++pass) {
    const double h_target = 47.0 / contour.steps_ray;
    const int steps =
        std::max(contour.steps_ray, int((tau_hi - tau_lo) / h_target));
    rays = trapezoid(ray_diff, tau_lo, tau_hi, steps);
    const double residual = std::abs(ray_diff(tau_lo));
    const double scale = std::max(std::abs(rays), 1e-280);
    if (residual <= 1e-14 * scale) break;
    tau_lo -= std::log(residual / (1e-14 * scale)) + 4.0;
  }

  // Circle: zeta = radius e^{i theta}, theta in [-pi, pi].  Gauss-Legendre
  // panels; plain trapezoid is only O(h^2) here because the integrand is not
  // periodic across the ray junctions.
  auto arc_term = [&](double theta) -> Complex {
    const Complex log_zeta(std::log(eps), theta);
    const Complex zeta = std::polar(eps, theta);
    return f(zeta, log_zeta) * Complex(0.0, 1.0) * zeta;
  };
  const int panels = std::max(2, contour.steps_arc / 16);
  const Complex arc = integrate_gl_panels(arc_term, -M_PI, M_PI, panels);

  if (status) {
    const double lr = std::log(contour.cutoff);
    status->tail_magnitude =
        std::abs(f(Complex(-contour.cutoff, 0.0), Complex(lr, M_PI)));
    const double scale = std::max(std::abs(rays + arc), 1e-300);
    status->tail_warning = status->tail_magnitude > 1e-6 * scale;
  }
  return (rays + arc) / Complex(0.0, 2.0 * M_PI);
}

Complex recip_gamma_hankel(Complex z, const HankelContour& contour,
                           HankelStatus* status) {
  return hankel_integrate(
      contour,
      [z](Complex zeta, Complex log_zeta) {
        return std::exp(zeta - z * log_zeta);
      },
      status);
}

Complex recip_gamma_hankel(Complex z, HankelStatus* status) {
  return recip_gamma_hankel(z, HankelContour::for_reciprocal_gamma(z), status);
}

Complex mittag_leffler_series(MLOrder nu, Complex u, double tol) {
  if (!(tol > 0.0)) throw precondition_error("mittag_leffler_series: tol must be > 0");
  Complex sum = 1.0;  // k = 0 term
  Complex term = 1.0;
  double peak = 1.0;
  int consecutive_small = 0;
  double prev_lgamma = 0.0;  // lgamma(1)
  for (int k = 1; k < 100000; ++k) {
    const double lg = std::lgamma(nu.nu * k + 1.0);
    term *= -u * std::exp(prev_lgamma - lg);
    prev_lgamma = lg;
    const double mag = std::abs(term);
    if (!(mag < 1e290))
      throw series_overflow_error(
          "mittag_leffler_series: term overflow before convergence; "
          "use the Hankel path");
    sum += term;
    peak = std::max(peak, mag);
    if (mag < tol * std::abs(sum)) {
      if (++consecutive_small >= 2) {
        const double roundoff = peak * std::numeric_limits<double>::epsilon();
        if (roundoff > tol * std::max(std::abs(sum), 1e-300))
          throw series_overflow_error(
              "mittag_leffler_series: cancellation exhausts double precision "
              "at this argument; use the Hankel path");
        return sum;
      }
    } else {
      consecutive_small = 0;
    }
  }
  throw numerics_error("mittag_leffler_series: no convergence in term budget");
}

double distance_to_ml_singular_set(double nu, Complex u,
                                   const HankelContour& contour) {
  const double rho = 1.0 - nu;
  const double a = std::pow(contour.radius, nu);
  const double b = std::pow(contour.cutoff, nu);
  double d = distance_to_origin_ray(u, M_PI * rho, a, b);
  d = std::min(d, distance_to_origin_ray(u, -M_PI * rho, a, b));
  // Circle arc of radius a over |arg| >= pi*rho.
  const double phi = std::abs(std::arg(u));
  if (phi >= M_PI * rho) {
    d = std::min(d, std::abs(std::abs(u) - a));
  } else {
    d = std::min(d, std::abs(u - std::polar(a, M_PI * rho)));
    d = std::min(d, std::abs(u - std::polar(a, -M_PI * rho)));
  }
  return d;
}

Complex mittag_leffler_hankel(MLOrder nu, Complex u,
                              const HankelContour& contour,
                              HankelStatus* status) {
  contour.validate();
  if (distance_to_ml_singular_set(nu.nu, u, contour) < kExclusionDistance)
    throw precondition_error(
        "mittag_leffler_hankel: u lies within the exclusion distance of the "
        "denominator zero set H0; choose another contour radius");
  const double rho = 1.0 - nu.nu;
  Complex value = hankel_integrate(
      contour,
      [u, rho](Complex zeta, Complex log_zeta) {
        return std::exp(zeta) / (zeta + u * std::exp(rho * log_zeta));
      },
      status);
  // The denominator has one zero on the branch, zeta* = (-u)^{1/nu}, when
  // |arg(-u)| < pi nu.  The circle collects it while |zeta*| < radius;
  // once the pole sits outside, analytic continuation in u carries its
  // residue e^{zeta*} / (1 + u rho zeta*^{rho-1}) explicitly.
  if (u != Complex(0.0)) {
    const Complex log_mu = std::log(-u);
    if (std::abs(log_mu.imag()) < M_PI * nu.nu) {
      const Complex zeta_star = std::exp(log_mu / nu.nu);
      if (std::abs(zeta_star) > contour.radius)
        value += std::exp(zeta_star) /
                 (1.0 + u * rho * std::exp((rho - 1.0) * log_mu / nu.nu));
    }
  }
  return value;
}

}  // namespace mellin
