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
#include "mellin/mellin_transform.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/complex_gamma.hpp"
#include "mellin/errors.hpp"

namespace mellin {

namespace {

struct HalfView {
  const std::function<double(double)>* f;
  Interval strip;
  Interval support;
  double decay;
};

HalfView half_view(const DensityOnR& d, Side side) {
  if (side == Side::plus)
    return {&d.plus, d.strip_plus, d.support_plus, d.decay_plus};
  return {&d.minus, d.strip_minus, d.support_minus, d.decay_minus};
}

// log-variable integration window for int_0^inf h(x) x^{s-1} dx.
std::pair<double, double> log_window(const HalfView& v, double re_s) {
  double hi;
  if (v.support.hi < kUnbounded) {
    hi = std::log(v.support.hi);
  } else {
    if (!(v.decay > 0.0))
      throw precondition_error("mellin quadrature: unbounded support needs a "
                               "positive decay rate");
    hi = std::log(45.0 / v.decay);
  }
  double lo;
  if (v.support.lo > 0.0) {
    lo = std::log(v.support.lo);
  } else {
    const double rate = std::max(re_s - v.strip.lo, 0.05);
    lo = -std::min(45.0 / rate, 900.0);
  }
  return {lo, hi};
}

Complex half_forward(const HalfView& v, Complex s, int steps) {
  if (v.support.empty()) return 0.0;
  const auto [lo, hi] = log_window(v, s.real());
  if (!(lo < hi)) return 0.0;
  const auto& f = *v.f;
  // Panels rather than trapezoid: support edges leave the integrand finite
  // at the window ends.  Off the real axis the factor e^{i Im(s) x}
  // oscillates, so the panel count must track |Im s|.
  const int panels =
      std::max({8, steps / 16,
                int(std::abs(s.imag()) * (hi - lo) / 5.0) + 1});
  return integrate_gl_panels(
      [&](double x) { return f(std::exp(x)) * std::exp(s * x); }, lo, hi,
      panels);
}

}  // namespace

double DensityOnR::value(double x) const {
  if (x > 0.0) return has_plus() ? plus(x) : 0.0;
  if (x < 0.0) return has_minus() ? minus(-x) : 0.0;
  return has_plus() ? plus(1e-300) : 0.0;
}

std::pair<Complex, Complex> mellin_forward(const DensityOnR& f, Complex s) {
  const double re = s.real();
  if (f.has_plus() && !f.strip_plus.contains(re))
    throw precondition_error("mellin_forward: Re(s) outside the plus strip");
  if (f.has_minus() && !f.strip_minus.contains(re))
    throw precondition_error("mellin_forward: Re(s) outside the minus strip");
  return {half_forward(half_view(f, Side::plus), s, f.steps),
          half_forward(half_view(f, Side::minus), s, f.steps)};
}

MellinPair mellin_forward_pair(const DensityOnR& f) {
  MellinPair m;
  m.strip = f.strip_plus;
  if (f.has_minus()) {
    m.strip.lo = std::max(m.strip.lo, f.strip_minus.lo);
    m.strip.hi = std::min(m.strip.hi, f.strip_minus.hi);
  }
  m.has_minus = f.has_minus();
  m.plus = [f](Complex s) { return mellin_forward(f, s).first; };
  m.minus = [f](Complex s) { return mellin_forward(f, s).second; };
  return m;
}

namespace {

// One convolution term int h_a(|z|/y) h_b(y) dy/y over the exact support
// intersection, in w = log y.
double convolve_term(const HalfView& a, const HalfView& b, double z,
                     int steps) {
  if (a.support.empty() || b.support.empty()) return 0.0;
  const double lz = std::log(z);

  double hi = kUnbounded, lo = -kUnbounded;
  // b-side window.
  hi = std::min(hi, b.support.hi < kUnbounded ? std::log(b.support.hi)
                                              : std::log(45.0 / b.decay));
  if (b.support.lo > 0.0) lo = std::max(lo, std::log(b.support.lo));
  // a-side window: z/y must fall inside supp(a).
  if (a.support.lo > 0.0) hi = std::min(hi, lz - std::log(a.support.lo));
  lo = std::max(lo, a.support.hi < kUnbounded
                        ? lz - std::log(a.support.hi)
                        : lz + std::log(a.decay / 45.0));
  if (lo <= -kUnbounded || hi >= kUnbounded)
    throw numerics_error("mellin_convolve: cannot truncate the dy/y integral");
  if (!(lo < hi)) return 0.0;

  const auto& fa = *a.f;
  const auto& fb = *b.f;
  auto integrand = [&](double w) {
    return fa(std::exp(lz - w)) * fb(std::exp(w));
  };
  // Non-integrable dy/y mass shows up as a flat integrand at an open-ended
  // window edge: compare the edge against a point nudged inward.
  double peak = 0.0;
  for (int j = 0; j <= 16; ++j)
    peak = std::max(peak, std::abs(integrand(lo + (hi - lo) * j / 16.0)));
  const bool lo_open = !(b.support.lo > 0.0) && !(a.support.hi < kUnbounded);
  const bool hi_open = !(b.support.hi < kUnbounded) && !(a.support.lo > 0.0);
  auto flat_edge = [&](double edge, double inward) {
    const double v = std::abs(integrand(edge));
    return v > 1e-9 * peak && v > 0.7 * std::abs(integrand(inward));
  };
  const double nudge = 0.04 * (hi - lo);
  if (peak > 0.0 && ((lo_open && flat_edge(lo, lo + nudge)) ||
                     (hi_open && flat_edge(hi, hi - nudge))))
    throw numerics_error(
        "mellin_convolve: integrand does not decay (dy/y divergence)");
  return integrate_gl_panels(integrand, lo, hi, std::max(8, steps / 16)).real();
}

}  // namespace

double mellin_convolve(const DensityOnR& f, const DensityOnR& g, double z) {
  if (z == 0.0)
    throw precondition_error("mellin_convolve: z = 0 is not supported");
  const int steps = std::max(f.steps, g.steps);
  const double az = std::abs(z);
  if (z > 0.0)
    return convolve_term(half_view(f, Side::plus), half_view(g, Side::plus),
                         az, steps) +
           convolve_term(half_view(f, Side::minus), half_view(g, Side::minus),
                         az, steps);
  return convolve_term(half_view(f, Side::minus), half_view(g, Side::plus), az,
                       steps) +
         convolve_term(half_view(f, Side::plus), half_view(g, Side::minus), az,
                       steps);
}

std::pair<Complex, Complex> hyperbolic_product(
    const std::pair<Complex, Complex>& a,
    const std::pair<Complex, Complex>& b) {
  return {a.first * b.first + a.second * b.second,
          a.first * b.second + a.second * b.first};
}

std::pair<Complex, Complex> hyperbolic_product(const MellinPair& a,
                                               const MellinPair& b, Complex s) {
  return hyperbolic_product(a.eval(s), b.eval(s));
}

namespace {

ComplexFunction inversion_integrand(const MellinPair& m, double x, Side side) {
  const double lx = std::log(x);
  if (side == Side::plus) {
    auto p = m.plus;
    return {[p, lx](Complex s) { return p(s) * std::exp(-s * lx); },
            "Mellin inversion integrand"};
  }
  auto q = m.minus;
  return {[q, lx](Complex s) { return q(s) * std::exp(-s * lx); },
          "Mellin inversion integrand"};
}

void check_inversion_args(const MellinPair& m, double x, double gamma) {
  if (!(x > 0.0)) throw precondition_error("mellin_invert: x must be > 0");
  if (!m.strip.contains(gamma))
    throw precondition_error("mellin_invert: gamma outside the strip");
}

}  // namespace

double mellin_invert(const MellinPair& m, double x, double gamma,
                     const BromwichLine& line, Side side, QuadStatus* status) {
  check_inversion_args(m, x, gamma);
  return integrate_bromwich(inversion_integrand(m, x, side),
                            line.with_abscissa(gamma), status)
      .real();
}

Extrapolated mellin_invert_extrapolated(const MellinPair& m, double x,
                                        double gamma, const BromwichLine& line,
                                        const std::vector<double>& eps_sequence,
                                        Side side) {
  check_inversion_args(m, x, gamma);
  return extrapolate_regularizer(inversion_integrand(m, x, side),
                                 line.with_abscissa(gamma), eps_sequence);
}

std::pair<double, double> plancherel_check(
    const DensityOnR& f, const DensityOnR& g, double gamma,
    const BromwichLine& line, const std::vector<double>& eps_sequence) {
  if (!f.has_plus() || !g.has_plus()) return {0.0, 0.0};
  if (!f.strip_plus.contains(gamma) || !g.strip_plus.contains(gamma))
    throw precondition_error("plancherel_check: gamma outside a plus strip");

  ComplexFunction lhs_integrand{
      [&f, &g](Complex s) {
        return half_forward(half_view(f, Side::plus), s, f.steps) *
               std::conj(half_forward(half_view(g, Side::plus), s, g.steps));
      },
      "Plancherel contour integrand"};
  Complex lhs;
  if (eps_sequence.empty())
    lhs = integrate_bromwich(lhs_integrand, line.with_abscissa(gamma));
  else
    lhs = extrapolate_regularizer(lhs_integrand, line.with_abscissa(gamma),
                                  eps_sequence)
              .value;

  // Densities cut off at a support edge h leave M f(s) ~ f(h) h^s / s, so
  // |M f M g| decays only like 1/t^2 and the truncated line misses
  // f(h) g(h) h^{2 gamma} (pi/2 - atan(T/gamma)) / (pi gamma).  Add that
  // tail in closed form when both edges coincide (non-matching edges
  // dephase).
  const double hf = f.support_plus.hi, hg = g.support_plus.hi;
  if (hf < kUnbounded && hg < kUnbounded && std::abs(hf - hg) < 1e-12) {
    const double edge = f.plus(hf * (1.0 - 1e-12)) * g.plus(hg * (1.0 - 1e-12));
    if (edge != 0.0)
      lhs += edge * std::pow(hf, 2.0 * gamma) *
             (0.5 * M_PI - std::atan(line.half_height / gamma)) /
             (M_PI * gamma);
  }

  // Right side on the half-line: int f(x) g(x) x^{2 gamma - 1} dx.
  const auto va = half_view(f, Side::plus);
  const auto vb = half_view(g, Side::plus);
  const double hi =
      std::min(std::exp(log_window(va, gamma).second),
               std::exp(log_window(vb, gamma).second));
  ComplexFunction prod{[&f, &g](Complex x) {
                         const double v = x.real();
                         return Complex(f.plus(v) * g.plus(v), 0.0);
                       },
                       "Plancherel half-line integrand"};
  const Complex rhs =
      integrate_halfline(prod, Complex(1.0 - 2.0 * gamma, 0.0), hi,
                         std::max(f.steps, g.steps));
  return {lhs.real(), rhs.real()};
}

std::pair<Complex, Complex> mellin_from_laplace(const BilateralLaplace& phi,
                                                Complex s, double beta,
                                                const BromwichLine& line) {
  if (!(s.real() > 0.0))
    throw precondition_error("mellin_from_laplace: Re(s) must be > 0");
  if (!(beta < 0.0))
    throw precondition_error(
        "mellin_from_laplace: the line must satisfy beta < 0 (Re(-u) > 0 "
        "keeps (-u)^{-s} on the principal branch)");
  // (-u)^{-s} localizes like (1 + (t/beta)^2)^{-Re s/2} and oscillates at
  // frequency up to |s|/|beta| near t = 0, so truncation and resolution are
  // adapted to s rather than taken verbatim from the caller's line.
  BromwichLine l = line.with_abscissa(beta);
  const double b = -beta;
  const double re_s = std::max(s.real(), 0.5);
  const double t_need = (39.0 / re_s < 40.0)
                            ? b * std::exp(39.0 / re_s)
                            : line.half_height;
  if (t_need < line.half_height) {
    l.half_height = t_need;
    l.tail_cutoff = 0.0;  // power decay is overwhelming here
  }
  const double osc_steps = 3.2 * l.half_height * (std::abs(s) + 2.0) / b;
  l.steps = std::min(
      std::max({int(double(line.steps) * l.half_height / line.half_height),
                int(osc_steps), 600}),
      2'000'000);
  const Complex gs = gamma(s);
  auto bridge = [&](bool mirrored) {
    ComplexFunction integrand{
        [&phi, s, mirrored](Complex u) {
          const Complex arg = mirrored ? -u : u;
          return phi(arg) * std::exp(-s * std::log(-u));
        },
        "Theorem-3 bridge integrand"};
    return gs * integrate_bromwich(integrand, l);
  };
  return {bridge(false), bridge(true)};
}

namespace {

// One component of Eq-style phi recovery: (1/2 pi i) int M(s) Gamma(1-s)
// w^{s-1} ds.  Converges absolutely only for |arg w| < pi/2 (the w^{s-1}
// factor grows like e^{|t| |arg w|} against the e^{-pi |t|/2} of Gamma).
Complex laplace_component_line(const std::function<Complex(Complex)>& M,
                               Complex w, double gamma_line,
                               const BromwichLine& line,
                               const std::vector<double>& eps_sequence) {
  const Complex log_w = std::log(w);
  ComplexFunction integrand{
      [&M, log_w](Complex s) {
        return M(s) * gamma(1.0 - s) * std::exp((s - 1.0) * log_w);
      },
      "Theorem-3 inverse bridge integrand"};
  const BromwichLine l = line.with_abscissa(gamma_line);
  if (eps_sequence.empty()) return integrate_bromwich(integrand, l);
  return extrapolate_regularizer(integrand, l, eps_sequence).value;
}

// Past the absolute-convergence sector the contour closes right over the
// Gamma(1-s) poles at s = k+1, which resums the component as the moment
// series sum_k M(k+1) (-w)^k / k!.
Complex laplace_component_moments(const std::function<Complex(Complex)>& M,
                                  Complex w) {
  Complex sum = 0.0;
  Complex power = 1.0;
  double factorial = 1.0;
  int small_terms = 0;
  for (int k = 0; k < 170; ++k) {
    if (k > 0) {
      power *= -w;
      factorial *= k;
    }
    const Complex term = M(Complex(double(k + 1))) * power / factorial;
    sum += term;
    if (std::abs(term) < 1e-12 * std::max(std::abs(sum), 1e-300)) {
      if (++small_terms >= 2) return sum;
    } else {
      small_terms = 0;
    }
  }
  throw numerics_error(
      "laplace_from_mellin: moment series did not converge (|u| too close to "
      "the density's decay rate)");
}

Complex laplace_component(const std::function<Complex(Complex)>& M, Complex w,
                          double gamma_line, const BromwichLine& line,
                          const std::vector<double>& eps_sequence) {
  if (std::abs(std::arg(w)) < 0.5 * M_PI - 0.05)
    return laplace_component_line(M, w, gamma_line, line, eps_sequence);
  return laplace_component_moments(M, w);
}

}  // namespace

Complex laplace_from_mellin(const MellinPair& m, Complex u, double gamma_line,
                            const BromwichLine& line,
                            const std::vector<double>& eps_sequence) {
  if (u == Complex(0.0))
    throw precondition_error("laplace_from_mellin: u must be nonzero");
  if (!m.strip.contains(gamma_line))
    throw precondition_error("laplace_from_mellin: gamma outside the strip");
  Complex value =
      laplace_component(m.plus, u, gamma_line, line, eps_sequence);
  if (m.has_minus)
    value += laplace_component(m.minus, -u, gamma_line, line, eps_sequence);
  return value;
}

std::pair<Complex, Complex> mellin_from_fourier(const ComplexFunction& fstar,
                                                double s, double upper,
                                                int steps) {
  if (!(s > 0.0 && s < 1.0))
    throw precondition_error("mellin_from_fourier: s must lie in (0, 1)");
  const Complex integral =
      integrate_halfline(fstar, Complex(s, 0.0), upper, steps);
  const Complex gs = gamma(Complex(s, 0.0));
  const Complex phase = std::exp(Complex(0.0, -0.5 * M_PI * s));
  return {gs / M_PI * (phase * integral).real(),
          gs / M_PI * (std::conj(phase) * integral).real()};
}

Complex fourier_from_mellin(const MellinPair& m, double y, double gamma_line,
                            const BromwichLine& line) {
  if (y == 0.0)
    throw precondition_error("fourier_from_mellin: y must be nonzero");
  if (y < 0.0) return std::conj(fourier_from_mellin(m, -y, gamma_line, line));
  if (!m.strip.contains(gamma_line) || gamma_line <= 0.0 || gamma_line >= 1.0)
    throw precondition_error(
        "fourier_from_mellin: gamma must lie in the strip and in (0, 1)");
  const double ly = std::log(y);
  const bool with_minus = m.has_minus;
  ComplexFunction integrand{
      [&m, ly, with_minus](Complex s) {
        const Complex g1 = gamma(1.0 - s);
        const Complex yp = std::exp((s - 1.0) * ly);
        const Complex rot = std::exp(Complex(0.0, -0.5 * M_PI) * s);
        Complex acc = m.plus(s) * g1 * rot * yp;
        if (with_minus) acc -= m.minus(s) * g1 * yp / rot;
        return acc;
      },
      "Theorem-4 inverse bridge integrand"};
  return Complex(0.0, 1.0) *
         integrate_bromwich(integrand, line.with_abscissa(gamma_line));
}

double total_mass(const DensityOnR& f) {
  const auto [p, q] = mellin_forward(f, Complex(1.0, 0.0));
  return p.real() + q.real();
}

}  // namespace mellin
