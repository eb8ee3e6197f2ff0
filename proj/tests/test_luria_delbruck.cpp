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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mellin/errors.hpp"
#include "mellin/hankel.hpp"
#include "mellin/luria_delbruck.hpp"
#include "mellin/rng.hpp"
#include "oracles.hpp"

using namespace mellin;

TEST_CASE("ld_step transitions") {
  const LDParams p1(0.5, 1);
  LDState s;  // (1, 1, 0)
  // Non-mutant divides without mutation: draw in [rho L/N, L/N) = [0.5, 1).
  const auto grown = ld_step(s, p1, 0.6);
  CHECK(grown.nonmutants == 2);
  CHECK(grown.total == 2);
  CHECK(grown.divisions == 1);

  const LDParams p2(0.5, 2);
  // Mutation branch: draw in [0, rho L/N) = [0, 0.5).
  const auto mutated = ld_step(s, p2, 0.1);
  CHECK(mutated.nonmutants == 1);
  CHECK(mutated.total == 3);
  CHECK(mutated.divisions == 1);

  // rho = 0: nonmutants reach n kappa + 1 deterministically.
  const LDParams p0(0.0, 2);
  LDState st;
  for (int k = 0; k < 10; ++k) st = ld_step(st, p0, 0.99 * (k % 2 ? 0.3 : 0.8));
  CHECK(st.nonmutants == 21);
  CHECK(st.total == 21);

  CHECK_THROWS_AS(ld_step(st, p0, 1.0), precondition_error);
  LDState bad;
  bad.total = 5;
  CHECK_THROWS_AS(ld_step(bad, p1, 0.5), precondition_error);
}

TEST_CASE("simulate_ld: deterministic limit and budget guard") {
  const LDParams p0(0.0, 2);
  const auto samples = simulate_ld(p0, 100, 16, 42);
  for (double L : samples) CHECK(L == 201.0);
  CHECK_THROWS_AS(simulate_ld(LDParams(0.5, 2), 6'000'000, 1, 1),
                  precondition_error);
}

TEST_CASE("simulate_ld determinism across thread counts") {
  const LDParams p(0.4, 2);
  const auto a = simulate_ld(p, 500, 128, 7, 1);
  const auto b = simulate_ld(p, 500, 128, 7, 8);
  CHECK(a == b);
}

TEST_CASE("ml_mellin closed form") {
  CHECK(std::abs(ml_mellin(0.5, Complex(1.0)) - 1.0) < 1e-14);
  CHECK(std::abs(ml_mellin(0.5, Complex(2.0)) - 1.1283791670955126) < 1e-13);
  for (double s : {0.5, 1.7, 3.0})
    CHECK(std::abs(ml_mellin(0.0, Complex(s)) - 1.0) < 1e-13);
  // Oracle: -d/du E_{1-rho}(u) at 0 equals the first moment M Y(2).
  const double h = 1e-4;
  const double deriv =
      (mittag_leffler_series(MLOrder(0.5), h).real() -
       mittag_leffler_series(MLOrder(0.5), -h).real()) /
      (2.0 * h);
  CHECK(std::abs(-deriv - ml_mellin(0.5, Complex(2.0)).real()) < 1e-7);
}

TEST_CASE("size biasing: trivial weight, normalization, displayed product") {
  auto base = [](Complex s) { return ml_mellin(0.5, s); };
  CHECK(std::abs(size_biased_mellin(base, 0.0, Complex(1.7)) -
                 base(Complex(1.7))) < 1e-14);
  CHECK(std::abs(size_biased_mellin(base, 1.0, Complex(1.0)) - 1.0) < 1e-14);
  // The displayed product form for M Y_kbar(s) with rho = 0.5, kbar = 1.
  const double rho = 0.5, nu = 1.0 - rho, kbar = 1.0;
  const Complex s(2.0, 0.0);
  const Complex displayed =
      std::tgamma(3.0) / std::tgamma(nu * (2.0 + kbar - 1.0) + 1.0) *
      std::tgamma(1.0 + nu * kbar) / std::tgamma(1.0 + kbar);
  CHECK(std::abs(size_biased_mellin(base, kbar, s) - displayed) < 1e-12);
}

TEST_CASE("beta_power_mellin: normalization, beta moment, degenerate limit") {
  CHECK(std::abs(beta_power_mellin(0.5, 1.0, Complex(1.0)) - 1.0) < 1e-14);
  // kbar = 1: B ~ Beta(1-rho, rho); E[B^{(1-rho)(s-1)}] at s = 2, rho = 0.5
  // equals the Beta(0.5, 0.5) half-moment 2/pi.
  const double direct = oracle::integrate(
      [](double t) {
        // x = sin^2(t) absorbs both endpoint singularities:
        // dx/(x^{1/2}(1-x)^{1/2}) = 2 dt, integrand x^{1/2}.
        const double sn = std::sin(t);
        return 2.0 * sn / M_PI;
      },
      0.0, 0.5 * M_PI);
  CHECK(std::abs(direct - 2.0 / M_PI) < 1e-12);
  CHECK(std::abs(beta_power_mellin(0.5, 1.0, Complex(2.0)) - direct) < 1e-12);
  // (s = 0.5 with kbar = 0.5 is the Gamma(0)/Gamma(0) pole point.)
  for (double s : {0.75, 2.0, 3.0})
    CHECK(std::abs(beta_power_mellin(0.0, 0.5, Complex(s)) - 1.0) < 1e-13);
}

TEST_CASE("ld_mellin: normalization, kappa = 1 collapse, spot value") {
  for (double rho : {0.3, 0.5, 0.7})
    for (int kappa : {1, 2, 3})
      CHECK(std::abs(ld_mellin(LDParams(rho, kappa), Complex(1.0)) - 1.0) <=
            1e-14);
  const LDParams p(0.5, 1);
  for (double s : {0.5, 1.5, 2.0, 3.0})
    CHECK(std::abs(ld_mellin(p, Complex(s)) - ml_mellin(0.5, Complex(s))) <
          1e-13);
  CHECK(std::abs(ld_mellin(LDParams(0.5, 2), Complex(2.0)) -
                 0.8862269254527580) < 1e-13);
}

TEST_CASE("factorization identity across the parameter grid") {
  for (double rho : {0.3, 0.5, 0.7}) {
    for (int kappa : {1, 2, 3}) {
      const LDParams p(rho, kappa);
      auto base = [rho](Complex z) { return ml_mellin(rho, z); };
      for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        // s + kbar - 1 = 0 is a genuine pole of M L (kappa = 2 at s = 1/2).
        if (std::abs(s + p.kbar - 1.0) < 1e-9) {
          CHECK_THROWS_AS(ld_mellin(p, Complex(s)), precondition_error);
          continue;
        }
        const Complex lhs = ld_mellin(p, Complex(s));
        const Complex rhs = beta_power_mellin(rho, p.kbar, Complex(s)) *
                            size_biased_mellin(base, p.kbar, Complex(s));
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("ld_laplace series: trivial value, ML collapse, moment match") {
  const LDParams p(0.5, 1);
  CHECK(ld_laplace(p, 0.0) == 1.0);
  for (double u = 0.0; u <= 3.0; u += 0.3) {
    CHECK(std::abs(ld_laplace(p, u, 1e-11) -
                   mittag_leffler_series(MLOrder(0.5), u, 1e-11).real()) <
          1e-10);
  }
  // Series coefficients against ld_mellin moments: c_i * i! =
  // (-1)^i M L(i+1).
  for (auto [rho, kappa] : {std::pair<double, int>{0.5, 1},
                            std::pair<double, int>{0.3, 2},
                            std::pair<double, int>{0.6, 3}}) {
    const LDParams q(rho, kappa);
    const double nu = 1.0 - rho;
    double binom = 1.0, factorial = 1.0;
    for (int i = 1; i <= 3; ++i) {
      binom *= (-q.kbar - double(i - 1)) / double(i);
      factorial *= i;
      const double coeff = std::tgamma(q.kbar) * binom /
                           std::tgamma(i * nu + q.kbar);
      const double moment = (i % 2 ? -1.0 : 1.0) *
                            ld_mellin(q, Complex(double(i + 1))).real();
      CHECK(std::abs(coeff * factorial - moment) < 1e-10);
    }
  }
}

TEST_CASE("ld_laplace is completely-monotone-consistent on [0, 3]") {
  const LDParams p(0.4, 2);
  const double h = 0.25;
  for (double u = 0.0; u + 4 * h <= 3.0; u += 0.3) {
    for (int order = 0; order <= 4; ++order) {
      double d[5];
      for (int j = 0; j <= 4; ++j) d[j] = ld_laplace(p, u + j * h, 1e-11);
      for (int o = 0; o < order; ++o)
        for (int j = 0; j + o + 1 <= 4; ++j) d[j] = d[j + 1] - d[j];
      CHECK(d[0] * ((order % 2 == 0) ? 1.0 : -1.0) > -1e-10);
    }
  }
}

TEST_CASE("simulation vs analytic scale-free moment ratios (small run)") {
  // A fast version of the acceptance check: n = 2000, 2e4 replicas.
  const LDParams p(0.5, 1);
  const std::int64_t n = 2000, reps = 20000;
  const auto samples = simulate_ld(p, n, reps, 123457, 0);
  const double scale = std::pow(double(n), 1.0 - p.rho);
  double m1 = 0.0, m2 = 0.0;
  for (double L : samples) {
    const double l = L / scale;
    m1 += l;
    m2 += l * l;
  }
  m1 /= double(reps);
  m2 /= double(reps);
  const double ratio = m2 / (m1 * m1);
  const double analytic = (ld_mellin(p, Complex(3.0)) /
                           (ld_mellin(p, Complex(2.0)) *
                            ld_mellin(p, Complex(2.0))))
                              .real();
  // Bootstrap the ratio's standard error.
  Rng rng(7, 0);
  double bsum = 0.0, bsum2 = 0.0;
  const int B = 200;
  for (int b = 0; b < B; ++b) {
    double s1 = 0.0, s2 = 0.0;
    for (std::int64_t i = 0; i < reps; ++i) {
      const double L = samples[rng.next_u64() % reps] / scale;
      s1 += L;
      s2 += L * L;
    }
    const double r = (s2 / reps) / ((s1 / reps) * (s1 / reps));
    bsum += r;
    bsum2 += r * r;
  }
  const double se = std::sqrt(bsum2 / B - (bsum / B) * (bsum / B));
  // Finite-n bias at n = 2000 is ~n^{-1/2} ~ 1.3%; combined window.
  CHECK(std::abs(ratio - analytic) <= 3.0 * se + 0.035 * analytic);
}
