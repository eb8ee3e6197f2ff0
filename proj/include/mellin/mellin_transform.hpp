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
#include <utility>
#include <vector>

#include "mellin/contour.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

inline constexpr double kUnbounded = 1e300;

/// A function on the real line split into its half-line restrictions:
/// plus(x) = f(x) and minus(x) = f(-x), both on x > 0.  Each side carries its
/// fundamental strip, exponential tail decay rate, and support; a side with
/// empty support is absent (one-sided functions).
struct DensityOnR {
  std::function<double(double)> plus = [](double) { return 0.0; };
  std::function<double(double)> minus = [](double) { return 0.0; };
  Interval strip_plus{0.0, kUnbounded};
  Interval strip_minus{-kUnbounded, kUnbounded};
  double decay_plus = 1.0;
  double decay_minus = 1.0;
  Interval support_plus{0.0, kUnbounded};
  Interval support_minus{0.0, 0.0};
  int steps = 3000;

  bool has_plus() const { return !support_plus.empty(); }
  bool has_minus() const { return !support_minus.empty(); }

  /// f evaluated as a function on all of R.
  double value(double x) const;
};

/// The two-sided Mellin transform pair (M f+, M f-) as analytic functions on
/// a common vertical strip.
struct MellinPair {
  std::function<Complex(Complex)> plus = [](Complex) { return Complex(0.0); };
  std::function<Complex(Complex)> minus = [](Complex) { return Complex(0.0); };
  Interval strip{0.0, 1.0};
  bool has_minus = false;

  std::pair<Complex, Complex> eval(Complex s) const {
    return {plus(s), has_minus ? minus(s) : Complex(0.0)};
  }
};

/// phi(u) = int e^{-ux} f(x) dx on its strip of absolute convergence.
struct BilateralLaplace {
  std::function<Complex(Complex)> evaluator;
  Interval valid_strip{-1.0, 1.0};

  Complex operator()(Complex u) const { return evaluator(u); }
};

/// (M f+(s), M f-(s)) by graded-mesh quadrature.
std::pair<Complex, Complex> mellin_forward(const DensityOnR& f, Complex s);

/// Numeric transform wrapped as a MellinPair over the intersection strip.
MellinPair mellin_forward_pair(const DensityOnR& f);

/// Density of the product X*Y at z:
///   f (*) g (z) = int_0^inf [f(z/y) g(y) + f(-z/y) g(-y)] dy/y.
/// Integrates each term over the exact support intersection in log(y).
double mellin_convolve(const DensityOnR& f, const DensityOnR& g, double z);

/// Componentwise hyperbolic product of transform pairs at s:
///   (a+ b+ + a- b-,  a+ b- + a- b+).
std::pair<Complex, Complex> hyperbolic_product(const MellinPair& a,
                                               const MellinPair& b, Complex s);
std::pair<Complex, Complex> hyperbolic_product(
    const std::pair<Complex, Complex>& a, const std::pair<Complex, Complex>& b);

/// Mellin inversion f_side(x) = (1/2 pi i) int M f(s) x^{-s} ds along
/// Re(s) = gamma.  The line's regularizer applies if set.
double mellin_invert(const MellinPair& m, double x, double gamma,
                     const BromwichLine& line, Side side = Side::plus,
                     QuadStatus* status = nullptr);

/// Regularized inversion with eps -> 0 extrapolation, for transforms that
/// decay too slowly along the line (|M| ~ 1/|t|).
Extrapolated mellin_invert_extrapolated(const MellinPair& m, double x,
                                        double gamma, const BromwichLine& line,
                                        const std::vector<double>& eps_sequence,
                                        Side side = Side::plus);

/// Both sides of the Plancherel identity
///   (1/2 pi i) int M f(s) conj(M g(s)) ds = int_0^inf f conj(g) x^{2 gamma - 1} dx
/// computed independently (contour vs half-line quadrature).  A nonempty eps
/// sequence evaluates the left side with regularizer extrapolation.
std::pair<double, double> plancherel_check(
    const DensityOnR& f, const DensityOnR& g, double gamma,
    const BromwichLine& line, const std::vector<double>& eps_sequence = {});

/// Theorem-3 bridge: recovers the Mellin pair from the bilateral Laplace
/// transform,
///   M f+(s) = (Gamma(s)/2 pi i) int phi(u) (-u)^{-s} du,
///   M f-(s) = (Gamma(s)/2 pi i) int phi(-u) (-u)^{-s} du,
/// over the vertical line Re(u) = beta < 0 on the principal branch of
/// (-u)^{-s}.
std::pair<Complex, Complex> mellin_from_laplace(const BilateralLaplace& phi,
                                                Complex s, double beta,
                                                const BromwichLine& line);

/// Theorem-3 inverse bridge:
///   phi(u) = (1/2 pi i) int M f+(s) Gamma(1-s) u^{s-1} ds
///          + (1/2 pi i) int M f-(s) Gamma(1-s) (-u)^{s-1} ds.
/// The minus-side integral converges only Abel-regularized for real u; a
/// nonempty eps sequence enables the extrapolation.
Complex laplace_from_mellin(const MellinPair& m, Complex u, double gamma,
                            const BromwichLine& line,
                            const std::vector<double>& eps_sequence = {});

/// Theorem-4 bridge from the Fourier transform, for 0 < s < 1:
///   M f+(s) = (Gamma(s)/pi) Re(e^{-i s pi/2} int_0^inf f*(y) y^{-s} dy),
///   M f-(s) = (Gamma(s)/pi) Re(e^{+i s pi/2} int_0^inf f*(y) y^{-s} dy).
std::pair<Complex, Complex> mellin_from_fourier(const ComplexFunction& fstar,
                                                double s, double upper,
                                                int steps = 4000);

/// Theorem-4 inverse bridge:
///   f*(y) = i (1/2 pi i) int M f+(s) Gamma(1-s) e^{-s pi i/2} y^{s-1} ds
///         - i (1/2 pi i) int M f-(s) Gamma(1-s) e^{+s pi i/2} y^{s-1} ds,
/// with conjugate symmetry for y < 0.
Complex fourier_from_mellin(const MellinPair& m, double y, double gamma,
                            const BromwichLine& line);

/// Total mass M f+(1) + M f-(1); equals 1 for probability densities.
double total_mass(const DensityOnR& f);

}  // namespace mellin
