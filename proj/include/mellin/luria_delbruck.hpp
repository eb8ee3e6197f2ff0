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

#include <cstdint>
#include <functional>
#include <vector>

#include "mellin/quadrature.hpp"

namespace mellin {

/// (1 - rho, kappa) Luria-Delbrueck process: upon division a non-mutant cell
/// produces one non-mutant plus kappa mutants with probability rho, and
/// kappa + 1 non-mutants otherwise; mutants produce kappa + 1 mutants.
/// rho = 0 is permitted for testing the deterministic path.
struct LDParams {
  double rho;
  int kappa;
  double kbar;  // 1/kappa

  LDParams(double mutation_rho, int burst_kappa);
};

/// Embedded-chain state after `divisions` division events.
struct LDState {
  std::int64_t nonmutants = 1;
  std::int64_t total = 1;
  std::int64_t divisions = 0;

  void validate(const LDParams& p) const;
};

/// One division event driven by a single uniform draw in [0, 1):
///   [0, rho L/N)        mutation     (non-mutant divides, L unchanged)
///   [rho L/N, L/N)      expansion    (non-mutant divides, L += kappa)
///   [L/N, 1)            mutant divides.
/// Total grows by kappa either way.
LDState ld_step(const LDState& state, const LDParams& p, double draw);

/// Runs `replicas` independent chains of n division events from a single
/// non-mutant and returns the L_n samples.  Deterministic in
/// (seed, replicas) for any thread count.
std::vector<double> simulate_ld(const LDParams& p, std::int64_t n,
                                std::int64_t replicas, std::uint64_t seed,
                                int threads = 0);

/// Mellin transform of the (1 - rho)-Mittag-Leffler law:
///   M Y(s) = Gamma(s) / Gamma((1 - rho)(s - 1) + 1).
Complex ml_mellin(double rho, Complex s);

/// Mellin transform of the weight-biased law: base(s + w) / base(1 + w).
Complex size_biased_mellin(const std::function<Complex(Complex)>& base,
                           double weight, Complex s);

/// Mellin transform of B^{1-rho} with B ~ Beta((1-rho) kbar, rho kbar):
///   [Gamma(kbar)/Gamma((1-rho) kbar)]
///   * Gamma((1-rho)(s - 1 + kbar)) / Gamma((1-rho)(s - 1) + kbar).
Complex beta_power_mellin(double rho, double kbar, Complex s);

/// Mellin transform of the limit law L:
///   M L(s) = Gamma(s + kbar - 1) / Gamma((1-rho)(s - 1) + kbar),
/// cross-asserted against the product of the Beta-power factor and the
/// kbar-biased Mittag-Leffler factor to 1e-12.
Complex ld_mellin(const LDParams& p, Complex s);

/// Laplace transform of L as the binomial series
///   Gamma(kbar) sum_i C(-kbar, i) u^i / Gamma(i (1-rho) + kbar).
/// Truncates on two consecutive terms below tol * |sum|; throws
/// series_overflow_error when double precision cannot deliver tol.
double ld_laplace(const LDParams& p, double u, double tol = 1e-12);

}  // namespace mellin
