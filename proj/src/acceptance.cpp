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
#include "mellin/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "mellin/bellman_harris.hpp"
#include "mellin/complex_gamma.hpp"
#include "mellin/contour.hpp"
#include "mellin/densities.hpp"
#include "mellin/errors.hpp"
#include "mellin/hankel.hpp"
#include "mellin/luria_delbruck.hpp"
#include "mellin/mellin_transform.hpp"
#include "mellin/rng.hpp"
#include "mellin/stable.hpp"

namespace mellin::acceptance {

namespace {

namespace dens = mellin::densities;

struct Check {
  double worst = 0.0;
  bool ok = true;
  std::ostringstream note;

  void hold(double deviation, double tolerance) {
    worst = std::max(worst, deviation);
    if (!(deviation <= tolerance)) ok = false;
  }
};

std::vector<StableParams> stable_grid() {
  std::vector<StableParams> grid;
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    grid.emplace_back(alpha, 0.0);
    const double theta = 0.5 * alpha;
    if (alpha != 1.0 && theta <= std::min(alpha, 2.0 - alpha)) {
      grid.emplace_back(alpha, theta);
      grid.emplace_back(alpha, -theta);
    }
  }
  return grid;
}

// ---- criterion 1: stable-law Mellin agreement --------------------------

CriterionResult criterion_stable(int) {
  CriterionResult r{1, "stable-law Mellin closed form vs Fourier bridge",
                    false, 0.0, 1e-6, 60.0, 0.0, ""};
  Check c;
  double worst_rho = 0.0;
  for (const auto& p : stable_grid()) {
    worst_rho = std::max(worst_rho,
                         std::abs(p.rho_plus + p.rho_minus - 1.0));
    for (double s = 0.1; s < 0.95; s += 0.1) {
      const auto numeric = stable_mellin_numeric(p, s);
      c.hold(std::abs(numeric.first - stable_mellin(p, Complex(s), Side::plus)),
             1e-6);
      c.hold(std::abs(numeric.second -
                      stable_mellin(p, Complex(s), Side::minus)),
             1e-6);
    }
  }
  if (!(worst_rho <= 1e-14)) c.ok = false;
  c.note << "max |closed-numeric| = " << c.worst
         << "; max |rho+ + rho- - 1| = " << worst_rho;
  r.passed = c.ok;
  r.worst = c.worst;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 2: transform-calculus property suite ---------------------

CriterionResult criterion_calculus(int) {
  CriterionResult r{2, "Mellin transform calculus property suite",
                    false, 0.0, 1e-6, 120.0, 0.0, ""};
  Check c;

  // Scaling and power laws.
  const auto expd = dens::one_sided_exponential();
  for (double lambda : {0.5, 2.0, 10.0}) {
    const auto fl = dens::scaled(expd, lambda);
    for (double s : {0.4, 1.0, 2.3}) {
      const Complex lhs = mellin_forward(fl, Complex(s)).first;
      const Complex rhs =
          std::pow(lambda, -s) * mellin_forward(expd, Complex(s)).first;
      c.hold(std::abs(lhs - rhs), 1e-6);
    }
  }
  for (double mu : {0.5, 2.0}) {
    const auto fm = dens::powered(expd, mu);
    for (double s : {0.8, 1.6}) {
      c.hold(std::abs(mellin_forward(fm, Complex(s)).first -
                      mellin_forward(expd, Complex(s / mu)).first / mu),
             1e-6);
    }
  }
  const double scaling_worst = c.worst;

  // Convolution theorem on two-sided densities.
  const auto f2 = dens::symmetric_exponential();
  const auto g2 = dens::asymmetric_exponential(0.7, 1.0, 2.0);
  const auto mf = mellin_forward_pair(f2);
  const auto mg = mellin_forward_pair(g2);
  DensityOnR conv;
  conv.plus = [f2, g2](double z) { return mellin_convolve(f2, g2, z); };
  conv.minus = [f2, g2](double z) { return mellin_convolve(f2, g2, -z); };
  conv.strip_plus = conv.strip_minus = {0.0, kUnbounded};
  conv.decay_plus = conv.decay_minus = 0.2;
  conv.support_minus = {0.0, kUnbounded};
  conv.steps = 1600;
  for (double s : {0.7, 1.0, 1.8}) {
    const auto direct = mellin_forward(conv, Complex(s));
    const auto product = hyperbolic_product(mf, mg, Complex(s));
    c.hold(std::abs(direct.first - product.first), 1e-6);
    c.hold(std::abs(direct.second - product.second), 1e-6);
  }

  // Inversion round trip.
  {
    auto m = mellin_forward_pair(expd);
    BromwichLine line;
    line.half_height = 40.0;
    line.steps = 2000;
    for (double x : {0.3, 1.0, 2.5})
      c.hold(std::abs(mellin_invert(m, x, 1.0, line) - std::exp(-x)), 1e-6);
  }

  // Plancherel on the documented densities.
  {
    BromwichLine line;
    line.half_height = 60.0;
    line.steps = 3000;
    auto [l1, r1] = plancherel_check(expd, expd, 0.5, line);
    c.hold(std::abs(l1 - r1), 1e-6);
    const auto uni = dens::uniform01();
    auto [l2, r2] = plancherel_check(uni, uni, 0.5, line);
    c.hold(std::abs(l2 - r2), 1e-6);
  }

  // Theorem-3 bridges: forward recovery and full round trip.
  {
    BilateralLaplace phi{[](Complex u) { return 1.0 / (1.0 - u * u); },
                         {-1.0, 1.0}};
    BromwichLine bridge;
    bridge.half_height = 200.0;
    bridge.steps = 4000;
    bridge = bridge.with_log_tails(1e18, 1200);
    auto [bp, bm] = mellin_from_laplace(phi, Complex(0.7), -0.5, bridge);
    c.hold(std::abs(bp - 0.5 * gamma(Complex(0.7))), 1e-6);
    c.hold(std::abs(bm - 0.5 * gamma(Complex(0.7))), 1e-6);

    auto cache = std::make_shared<
        std::map<std::pair<double, double>, std::pair<Complex, Complex>>>();
    auto bridged = [bridge, phi, cache](Complex s) {
      const auto key = std::make_pair(s.real(), s.imag());
      auto it = cache->find(key);
      if (it == cache->end())
        it = cache->emplace(key, mellin_from_laplace(phi, s, -0.5, bridge))
                 .first;
      return it->second;
    };
    MellinPair m;
    m.plus = [bridged](Complex s) { return bridged(s).first; };
    m.minus = [bridged](Complex s) { return bridged(s).second; };
    m.has_minus = true;
    m.strip = {0.0, 1.0};
    BromwichLine outer;
    outer.half_height = 26.0;
    outer.steps = 2600;
    for (double u : {0.3, 0.6}) {
      const Complex rt = laplace_from_mellin(m, Complex(u), 0.5, outer);
      c.hold(std::abs(rt - 1.0 / (1.0 - u * u)), 1e-6);
    }
  }

  c.note << "scaling/power worst = " << scaling_worst
         << "; overall worst = " << c.worst;
  r.passed = c.ok;
  r.worst = c.worst;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 3: Lemma-5 oscillatory constants -------------------------

CriterionResult criterion_lemma5(int) {
  CriterionResult r{3, "damped oscillatory half-line integrals",
                    false, 0.0, 1e-6, 10.0, 0.0, ""};
  Check c;
  const auto etas = default_eta_sequence();
  for (double s = 0.1; s < 0.95; s += 0.1) {
    for (double sign : {1.0, -1.0}) {
      ComplexFunction osc{[sign](Complex y) {
                            return std::exp(Complex(0.0, sign * y.real()));
                          },
                          "e^{+-iy}"};
      const auto value = halfline_oscillatory(osc, Complex(1.0 - s), etas);
      const Complex expected = gamma(Complex(s)) *
                               std::exp(Complex(0.0, sign * 0.5 * M_PI * s));
      c.hold(std::abs(value.value - expected), 1e-6);
    }
  }
  c.note << "max |integral - Gamma(s) e^{+-i s pi/2}| = " << c.worst;
  r.passed = c.ok;
  r.worst = c.worst;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 4: Bellman-Harris life-time recovery ----------------------

CriterionResult criterion_recovery(int) {
  CriterionResult r{4, "Bellman-Harris life-time recovery",
                    false, 0.0, 1e-8, 120.0, 0.0, ""};
  Check c;
  BromwichLine line;
  line.abscissa = -0.5;
  line.half_height = 200.0;
  line.steps = 20000;
  line = line.with_log_tails(1e10, 900);

  double recovery_worst = 0.0;
  for (double kappa : {0.5, 1.0, 2.0}) {
    for (int m : {2, 3}) {
      const auto psi = LimitLaw::gamma_limit(kappa);
      const auto f = OffspringPGF::deterministic(m);
      for (double s : {0.5, 1.0, 2.0}) {
        const Complex recovered =
            recover_lifetime_laplace(psi, f, Complex(s), line);
        c.hold(std::abs(recovered -
                        gamma_case_lifetime_laplace(kappa, m, Complex(s))),
               1e-8);
      }
      recovery_worst = std::max(recovery_worst, c.worst);

      // Eq-24 density mass and the Malthusian normalization.
      const auto g = LifetimeDistribution::gamma_case(kappa, m);
      const Complex mass = integrate_gl_panels(
          [&](double tau) {
            return Complex(g.density(tau * tau) * 2.0 * tau, 0.0);
          },
          0.0, std::sqrt(g.t_max), 400);
      c.hold(std::abs(mass.real() - 1.0), 1e-8);
      c.hold(std::abs(malthusian(f, g, {1e-6, 32.0}) - 1.0), 1e-10);

      // Fixed-point residual of the limit-law equation at beta = 1.
      for (double u : {0.1, 0.5, 1.0, 2.0, 5.0})
        c.hold(fixed_point_residual(psi, f, g, 1.0, u), 1e-6);
    }
  }
  // Mixed-offspring case against the polynomial closed form.
  const auto mixed = OffspringPGF::from_probs({0.0, 0.0, 0.5, 0.5});
  const auto psi1 = LimitLaw::gamma_limit(1.0);
  for (double s : {0.5, 1.0, 2.0}) {
    c.hold(std::abs(recover_lifetime_laplace(psi1, mixed, Complex(s), line) -
                    poly_case_lifetime_laplace(mixed, 1.0, Complex(s))),
           1e-8);
  }
  c.note << "worst deviation across recovery/mass/malthusian/fixed-point = "
         << c.worst;
  r.passed = c.ok;
  r.worst = c.worst;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 5: Yule end-to-end validation -----------------------------

CriterionResult criterion_yule(int threads) {
  CriterionResult r{5, "Yule process end-to-end limit law",
                    false, 0.0, 3.0, 300.0, 0.0, ""};
  Check c;
  const auto f = OffspringPGF::deterministic(2);
  const auto g = LifetimeDistribution::exponential(1.0);
  const double T = 5.0;
  const std::int64_t n = 10000;
  const auto out = simulate_bellman_harris(f, g, T, n, 577215664, threads);
  const double scale = std::exp(-T);
  double worst_sigmas = 0.0;
  for (double u : {0.5, 1.0, 2.0}) {
    double lap = 0.0, lap2 = 0.0;
    for (double z : out.population) {
      const double v = std::exp(-u * z * scale);
      lap += v;
      lap2 += v * v;
    }
    lap /= double(n);
    lap2 /= double(n);
    const double se = std::sqrt((lap2 - lap * lap) / double(n));
    const double sigmas = std::abs(lap - 1.0 / (1.0 + u)) / se;
    worst_sigmas = std::max(worst_sigmas, sigmas);
    c.hold(sigmas, 3.0);
  }
  c.note << "max |empirical - (1+u)^{-1}| = " << worst_sigmas
         << " standard errors (10^4 replicas, horizon 5)";
  r.passed = c.ok;
  r.worst = worst_sigmas;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 6: Mittag-Leffler dual evaluation --------------------------

CriterionResult criterion_mittag_leffler(int) {
  CriterionResult r{6, "Mittag-Leffler series vs Hankel contour",
                    false, 0.0, 1e-9, 60.0, 0.0, ""};
  Check c;
  int series_points = 0, reference_points = 0;

  // High-precision references for the deep nu = 0.3 region where the power
  // series exhausts double precision (documented oracle: 120-digit
  // summation of the defining series).
  const std::map<double, double> deep_reference = {
      {2.5, 0.244983123794786943}, {3.0, 0.21180263319643578},
      {3.5, 0.186465509524011978}, {4.0, 0.166501744315516648},
      {4.5, 0.150374905688776735}, {5.0, 0.137080869020270638}};

  for (double nu : {0.3, 0.5, 0.7, 0.9, 1.0}) {
    for (double u = 0.0; u <= 5.0; u += 0.5) {
      const auto contour = HankelContour::for_argument(nu, u);
      const Complex h = mittag_leffler_hankel(MLOrder(nu), u, contour);
      c.hold(std::abs(h.imag()), 1e-10);
      double reference;
      try {
        reference = mittag_leffler_series(MLOrder(nu), u, 1e-10).real();
        ++series_points;
      } catch (const series_overflow_error&) {
        // The documented switch point: fall back to an independent value.
        ++reference_points;
        if (nu == 0.5) {
          reference = std::exp(u * u) * std::erfc(u);
        } else if (nu == 0.3) {
          reference = deep_reference.at(u);
        } else {
          c.ok = false;  // unexpected overflow region
          continue;
        }
      }
      c.hold(std::abs(h.real() - reference), 1e-9);
    }
  }

  // Reciprocal gamma against the direct Gamma over the documented window.
  double recip_worst = 0.0;
  for (double re = -2.0; re <= 10.0; re += 1.5) {
    for (double im = -10.0; im <= 10.0; im += 2.5) {
      const Complex z(re + 0.25, im + 0.1);
      const double dev = std::abs(recip_gamma_hankel(z) * gamma(z) - 1.0);
      recip_worst = std::max(recip_worst, dev);
      c.hold(dev, 1e-9);
    }
  }
  c.note << "worst deviation = " << c.worst << " (" << series_points
         << " series points, " << reference_points
         << " documented-overflow points vs independent references); "
         << "recip-gamma worst = " << recip_worst;
  r.passed = c.ok;
  r.worst = c.worst;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 7: Luria-Delbrueck limit law closed forms ------------------

CriterionResult criterion_ld_limit(int) {
  CriterionResult r{7, "Luria-Delbrueck limit-law factorization and series",
                    false, 0.0, 1e-10, 10.0, 0.0, ""};
  Check c;
  for (double rho : {0.3, 0.5, 0.7}) {
    for (int kappa : {1, 2, 3}) {
      const LDParams p(rho, kappa);
      auto base = [rho](Complex z) { return ml_mellin(rho, z); };
      for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        if (std::abs(s + p.kbar - 1.0) < 1e-9) continue;  // pole of M L
        const Complex lhs = ld_mellin(p, Complex(s));
        const Complex rhs = beta_power_mellin(rho, p.kbar, Complex(s)) *
                            size_biased_mellin(base, p.kbar, Complex(s));
        c.hold(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-12);
      }
      // Moment-coefficient consistency with the Laplace series.
      const double nu = 1.0 - rho;
      double binom = 1.0, factorial = 1.0;
      for (int i = 1; i <= 3; ++i) {
        binom *= (-p.kbar - double(i - 1)) / double(i);
        factorial *= i;
        const double coeff =
            std::tgamma(p.kbar) * binom / std::tgamma(i * nu + p.kbar);
        const double moment = (i % 2 ? -1.0 : 1.0) *
                              ld_mellin(p, Complex(double(i + 1))).real();
        c.hold(std::abs(coeff * factorial - moment), 1e-10);
      }
    }
  }
  // kappa = 1 collapse onto the Mittag-Leffler transform.
  for (double rho : {0.3, 0.5, 0.7}) {
    const LDParams p(rho, 1);
    for (double u = 0.0; u <= 3.0; u += 0.25) {
      c.hold(std::abs(ld_laplace(p, u, 1e-11) -
                      mittag_leffler_series(MLOrder(1.0 - rho), u, 1e-11)
                          .real()),
             1e-10);
    }
  }
  c.note << "worst deviation = " << c.worst;
  r.passed = c.ok;
  r.worst = c.worst;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 8: Luria-Delbrueck simulation vs analytic ratios -----------

struct RatioStats {
  double m2_ratio;    // E[L^2] / E[L]^2 of the scaled samples
  double half_ratio;  // E[L^{1/2}]^2 / E[L]
  double mean;
};

RatioStats ratios_of(const std::vector<double>& scaled) {
  double m_half = 0.0, m1 = 0.0, m2 = 0.0;
  for (double l : scaled) {
    m_half += std::sqrt(l);
    m1 += l;
    m2 += l * l;
  }
  const double n = double(scaled.size());
  m_half /= n;
  m1 /= n;
  m2 /= n;
  return {m2 / (m1 * m1), m_half * m_half / m1, m1};
}

CriterionResult criterion_ld_simulation(int threads) {
  CriterionResult r{8, "Luria-Delbrueck simulation vs limit-law moments",
                    false, 0.0, 3.0, 600.0, 0.0, ""};
  Check c;
  const std::int64_t n = 10000, replicas = 100000;
  double worst_sigmas = 0.0;
  std::ostringstream scales;
  for (auto [rho, kappa] : {std::pair<double, int>{0.5, 1},
                            std::pair<double, int>{0.3, 2}}) {
    const LDParams p(rho, kappa);
    auto samples = simulate_ld(p, n, replicas, 16180339, threads);
    const double norm = std::pow(double(n), 1.0 - rho);
    for (auto& L : samples) L /= norm;
    const auto stats = ratios_of(samples);

    const double m2_analytic =
        (ld_mellin(p, Complex(3.0)) /
         (ld_mellin(p, Complex(2.0)) * ld_mellin(p, Complex(2.0))))
            .real();
    const double half_analytic =
        (ld_mellin(p, Complex(1.5)) * ld_mellin(p, Complex(1.5)) /
         ld_mellin(p, Complex(2.0)))
            .real();

    // Bootstrap standard errors of both ratios.
    const int B = 300;
    Rng rng(271828, 0);
    double s2 = 0.0, s2sq = 0.0, sh = 0.0, shsq = 0.0;
    std::vector<double> resample(replicas);
    for (int b = 0; b < B; ++b) {
      for (std::int64_t i = 0; i < replicas; ++i)
        resample[i] = samples[rng.next_u64() % replicas];
      const auto bs = ratios_of(resample);
      s2 += bs.m2_ratio;
      s2sq += bs.m2_ratio * bs.m2_ratio;
      sh += bs.half_ratio;
      shsq += bs.half_ratio * bs.half_ratio;
    }
    const double se_m2 = std::sqrt(std::max(s2sq / B - (s2 / B) * (s2 / B), 0.0));
    const double se_half =
        std::sqrt(std::max(shsq / B - (sh / B) * (sh / B), 0.0));

    const double sig_m2 = std::abs(stats.m2_ratio - m2_analytic) / se_m2;
    const double sig_half = std::abs(stats.half_ratio - half_analytic) / se_half;
    worst_sigmas = std::max({worst_sigmas, sig_m2, sig_half});
    c.hold(sig_m2, 3.0);
    c.hold(sig_half, 3.0);

    // The kappa-dependent normalization of Theorem LS is reported, not
    // asserted (the scale-free ratios above are the check).
    const double scale_factor =
        stats.mean / ld_mellin(p, Complex(2.0)).real();
    scales << " (rho=" << rho << ",kappa=" << kappa
           << "): empirical scale factor " << scale_factor << ";";
  }
  c.note << "max deviation = " << worst_sigmas
         << " bootstrap standard errors;" << scales.str();
  r.passed = c.ok;
  r.worst = worst_sigmas;
  r.detail = c.note.str();
  return r;
}

// ---- criterion 9: determinism across thread counts ------------------------

CriterionResult criterion_determinism(int) {
  CriterionResult r{9, "simulation determinism for any thread count",
                    false, 0.0, 0.0, 60.0, 0.0, ""};
  const LDParams p(0.4, 2);
  const auto a = simulate_ld(p, 2000, 512, 31415, 1);
  const auto b = simulate_ld(p, 2000, 512, 31415, 8);
  const auto f = OffspringPGF::deterministic(2);
  const auto g = LifetimeDistribution::exponential(1.0);
  const auto x = simulate_bellman_harris(f, g, 4.0, 512, 27182, 1);
  const auto y = simulate_bellman_harris(f, g, 4.0, 512, 27182, 8);
  const bool same = (a == b) && (x.population == y.population);
  r.passed = same;
  r.worst = same ? 0.0 : 1.0;
  r.detail = same ? "identical sample sets with 1 and 8 worker threads"
                  : "sample sets differ across thread counts";
  return r;
}

}  // namespace

std::vector<CriterionResult> run(const std::vector<int>& subset, int threads) {
  using Runner = std::function<CriterionResult(int)>;
  const std::vector<Runner> runners = {
      criterion_stable,     criterion_calculus,  criterion_lemma5,
      criterion_recovery,   criterion_yule,      criterion_mittag_leffler,
      criterion_ld_limit,   criterion_ld_simulation, criterion_determinism};
  std::vector<CriterionResult> results;
  for (int k = 1; k <= int(runners.size()); ++k) {
    if (!subset.empty() &&
        std::find(subset.begin(), subset.end(), k) == subset.end())
      continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = runners[k - 1](threads);
    } catch (const std::exception& e) {
      r.index = k;
      r.name = "criterion " + std::to_string(k);
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (r.budget_seconds > 0.0 && r.elapsed_seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += " [budget exceeded]";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.index << ": "
      << r.name << " -- " << r.detail << " (" << r.elapsed_seconds << " s of "
      << r.budget_seconds << " s budget)";
  return out.str();
}

}  // namespace mellin::acceptance
