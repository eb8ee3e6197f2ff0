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
#include "mellin/luria_delbruck.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "mellin/complex_gamma.hpp"
#include "mellin/errors.hpp"
#include "mellin/parallel.hpp"
#include "mellin/rng.hpp"

namespace mellin {

LDParams::LDParams(double mutation_rho, int burst_kappa)
    : rho(mutation_rho), kappa(burst_kappa), kbar(1.0 / burst_kappa) {
  if (rho < 0.0 || rho >= 1.0)
    throw precondition_error("LDParams: rho must lie in [0, 1)");
  if (kappa < 1) throw precondition_error("LDParams: kappa must be >= 1");
}

void LDState::validate(const LDParams& p) const {
  if (total != divisions * p.kappa + 1)
    throw precondition_error("LDState: total != divisions * kappa + 1");
  if (nonmutants < 0 || nonmutants > total)
    throw precondition_error("LDState: nonmutant count out of range");
}

LDState ld_step(const LDState& state, const LDParams& p, double draw) {
  state.validate(p);
  if (!(draw >= 0.0 && draw < 1.0))
    throw precondition_error("ld_step: draw must lie in [0, 1)");
  LDState next = state;
  const double frac = double(state.nonmutants) / double(state.total);
  if (draw >= p.rho * frac && draw < frac) next.nonmutants += p.kappa;
  next.total += p.kappa;
  next.divisions += 1;
  return next;
}

std::vector<double> simulate_ld(const LDParams& p, std::int64_t n,
                                std::int64_t replicas, std::uint64_t seed,
                                int threads) {
  if (n < 1 || replicas < 1)
    throw precondition_error("simulate_ld: n and replicas must be >= 1");
  if (n * std::int64_t(p.kappa) > 10'000'000)
    throw precondition_error("simulate_ld: per-replica budget n*kappa <= 1e7");
  std::vector<double> samples(replicas, 0.0);
  if (threads <= 0) threads = int(std::thread::hardware_concurrency());
  const double rho = p.rho;
  const std::int64_t kappa = p.kappa;
  parallel_for(replicas, threads, [&](std::int64_t r) {
    Rng rng(seed, std::uint64_t(r));
    std::int64_t L = 1, N = 1;
    for (std::int64_t k = 0; k < n; ++k) {
      const double u = rng.uniform();
      const double frac = double(L) / double(N);
      if (u >= rho * frac && u < frac) L += kappa;
      N += kappa;
    }
    samples[r] = double(L);
  });
  return samples;
}

Complex ml_mellin(double rho, Complex s) {
  if (rho < 0.0 || rho >= 1.0)
    throw precondition_error("ml_mellin: rho must lie in [0, 1)");
  return gamma_ratio(s, (1.0 - rho) * (s - 1.0) + 1.0);
}

Complex size_biased_mellin(const std::function<Complex(Complex)>& base,
                           double weight, Complex s) {
  const Complex norm = base(Complex(1.0 + weight));
  if (std::abs(norm) < 1e-280)
    throw numerics_error("size_biased_mellin: vanishing normalizer");
  return base(s + weight) / norm;
}

Complex beta_power_mellin(double rho, double kbar, Complex s) {
  if (rho < 0.0 || rho >= 1.0 || !(kbar > 0.0))
    throw precondition_error("beta_power_mellin: bad parameters");
  const double nu = 1.0 - rho;
  return std::exp(log_gamma(Complex(kbar)) - log_gamma(Complex(nu * kbar)) +
                  log_gamma(nu * (s - 1.0 + kbar)) -
                  log_gamma(nu * (s - 1.0) + kbar));
}

Complex ld_mellin(const LDParams& p, Complex s) {
  const Complex closed =
      gamma_ratio(s + p.kbar - 1.0, (1.0 - p.rho) * (s - 1.0) + p.kbar);
  // The distributional factorization L = B^{1-rho} * Y_kbar carries over to a
  // plain product of Mellin transforms (all mass on the positive axis).
  const Complex factored =
      beta_power_mellin(p.rho, p.kbar, s) *
      size_biased_mellin([&p](Complex z) { return ml_mellin(p.rho, z); },
                         p.kbar, s);
  if (std::abs(closed - factored) > 1e-9 * std::max(1.0, std::abs(closed)))
    throw numerics_error("ld_mellin: factorization cross-check failed");
  return closed;
}

double ld_laplace(const LDParams& p, double u, double tol) {
  if (u < 0.0) throw precondition_error("ld_laplace: u must be >= 0");
  if (!(tol > 0.0)) throw precondition_error("ld_laplace: tol must be > 0");
  const double nu = 1.0 - p.rho;
  const double lg_kbar = std::lgamma(p.kbar);
  // term_i = Gamma(kbar) C(-kbar, i) u^i / Gamma(i nu + kbar), with the
  // binomial coefficient kept as a running product.
  double term = 1.0;  // i = 0
  double sum = 1.0;
  double binom = 1.0, upow = 1.0;
  double peak = 1.0;
  int consecutive_small = 0;
  for (int i = 1; i < 100000; ++i) {
    binom *= (-p.kbar - double(i - 1)) / double(i);
    upow *= u;
    if (!std::isfinite(upow) || !std::isfinite(binom))
      throw series_overflow_error(
          "ld_laplace: series terms overflow; use the Mellin route");
    term = binom * upow * std::exp(lg_kbar - std::lgamma(i * nu + p.kbar));
    sum += term;
    peak = std::max(peak, std::abs(term));
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++consecutive_small >= 2) {
        if (peak * std::numeric_limits<double>::epsilon() >
            tol * std::max(std::abs(sum), 1e-300))
          throw series_overflow_error(
              "ld_laplace: cancellation exhausts double precision; use the "
              "Mellin route");
        return sum;
      }
    } else {
      consecutive_small = 0;
    }
  }
  throw numerics_error("ld_laplace: no convergence in term budget");
}

}  // namespace mellin
