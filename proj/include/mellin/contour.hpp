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
#include <string>
#include <vector>

#include "mellin/quadrature.hpp"

namespace mellin {

/// A complex-valued function of a complex variable with a note about the
/// strip or half-plane it is defined on.
struct ComplexFunction {
  std::function<Complex(Complex)> evaluator;
  std::string domain_note;

  Complex operator()(Complex s) const { return evaluator(s); }
};

/// Vertical integration line Re(s) = abscissa, truncated at
/// |Im(s)| = half_height with a uniform mesh of `steps` intervals.
///
/// When tail_cutoff > half_height the line is extended with logarithmically
/// spaced tail segments (tail_steps intervals each).  The tails are meant for
/// integrands with power decay |f| ~ |t|^-a, a > 1, and asymptotically
/// constant phase (the Theorem-3 bridges); they cannot resolve oscillation,
/// so leave them off for x^{-s}-type inversion integrands.
///
/// When regularizer_eps > 0 the integrand is multiplied by
/// exp(pi eps^2 s^2), which decays like exp(-pi eps^2 t^2) along the line;
/// callers drive eps -> 0 through extrapolate_regularizer.
struct BromwichLine {
  double abscissa = 0.5;
  double half_height = 200.0;
  int steps = 20000;
  double regularizer_eps = 0.0;
  double tail_cutoff = 0.0;  // disabled unless > half_height
  int tail_steps = 800;

  void validate() const;

  BromwichLine with_abscissa(double gamma) const {
    BromwichLine l = *this;
    l.abscissa = gamma;
    return l;
  }
  BromwichLine with_eps(double eps) const {
    BromwichLine l = *this;
    l.regularizer_eps = eps;
    return l;
  }
  BromwichLine with_log_tails(double cutoff = 1e8, int steps_per_side = 800) const {
    BromwichLine l = *this;
    l.tail_cutoff = cutoff;
    l.tail_steps = steps_per_side;
    return l;
  }
};

struct QuadStatus {
  double tail_magnitude = 0.0;  // |integrand| at the outermost node
  bool tail_warning = false;    // tail not negligible vs the result
  double error_estimate = 0.0;  // extrapolation spread where applicable
};

/// (1/2 pi i) \int f(s) ds over the truncated vertical line, including the
/// Gaussian regularizer when the line carries one.
Complex integrate_bromwich(const ComplexFunction& f, const BromwichLine& line,
                           QuadStatus* status = nullptr);

/// Evaluates integrate_bromwich over the given strictly decreasing eps
/// sequence and extrapolates polynomially to eps = 0.  The extrapolation
/// spread is reported as the error estimate.  Throws numerics_error when the
/// sequence of values diverges (successive differences growing 10-fold).
Extrapolated extrapolate_regularizer(const ComplexFunction& f,
                                     const BromwichLine& line,
                                     const std::vector<double>& eps_sequence);

/// \int_0^upper f(y) y^{-power} dy with nodes geometrically graded toward 0
/// (trapezoid rule under y = e^x).  Requires Re(power) < 1 so the endpoint
/// singularity is integrable.
Complex integrate_halfline(const ComplexFunction& f, Complex power,
                           double upper, int steps);

/// Abel-regularized oscillatory half-line integral
///   lim_{eta->0} \int_0^inf f(y) e^{-eta y} y^{-power} dy,
/// evaluated at each eta in the sequence and extrapolated to eta = 0.
/// The damped tail is integrated with Gauss-Legendre panels short enough to
/// resolve unit-frequency oscillation.
Extrapolated halfline_oscillatory(const ComplexFunction& f, Complex power,
                                  const std::vector<double>& eta_sequence);

/// Default eta schedule for halfline_oscillatory.
std::vector<double> default_eta_sequence();

/// Default eps schedule for extrapolate_regularizer on the default line.
std::vector<double> default_eps_sequence();

}  // namespace mellin
