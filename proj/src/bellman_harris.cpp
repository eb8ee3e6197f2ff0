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
#include "mellin/bellman_harris.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "mellin/complex_gamma.hpp"
#include "mellin/errors.hpp"
#include "mellin/parallel.hpp"
#include "mellin/rng.hpp"

namespace mellin {

namespace {
constexpr std::int64_t kPopulationGuard = 10'000'000;
}

OffspringPGF OffspringPGF::deterministic(int m) {
  if (m < 1) throw precondition_error("OffspringPGF: m must be >= 1");
  std::vector<double> p(m + 1, 0.0);
  p[m] = 1.0;
  return {std::move(p)};
}

OffspringPGF OffspringPGF::from_probs(std::vector<double> probs) {
  return {std::move(probs)};
}

double OffspringPGF::mean() const {
  double mu = 0.0;
  for (size_t j = 1; j < probs.size(); ++j) mu += double(j) * probs[j];
  return mu;
}

Complex OffspringPGF::value(Complex s) const {
  Complex acc = 0.0;
  for (size_t j = probs.size(); j-- > 0;) acc = acc * s + probs[j];
  return acc;
}

void OffspringPGF::validate(bool require_supercritical,
                            bool allow_extinction) const {
  if (probs.empty()) throw precondition_error("OffspringPGF: empty");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw precondition_error("OffspringPGF: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw precondition_error("OffspringPGF: probabilities must sum to 1");
  if (!allow_extinction && probs[0] != 0.0)
    throw precondition_error("OffspringPGF: pi_0 > 0 not supported here");
  if (require_supercritical && !(mean() > 1.0))
    throw precondition_error("OffspringPGF: supercriticality needs mean > 1");
}

LifetimeDistribution LifetimeDistribution::exponential(double rate) {
  if (!(rate > 0.0))
    throw precondition_error("LifetimeDistribution: rate must be > 0");
  LifetimeDistribution g;
  g.density = [rate](double t) { return rate * std::exp(-rate * t); };
  g.laplace = [rate](Complex s) { return rate / (rate + s); };
  g.support_note = "(0, inf), exponential";
  g.t_max = 45.0 / rate;
  return g;
}

LifetimeDistribution LifetimeDistribution::gamma_case(double kappa, int m) {
  if (!(kappa > 0.0) || m < 2)
    throw precondition_error("gamma_case: need kappa > 0 and m >= 2");
  LifetimeDistribution g;
  const double norm = std::exp(std::lgamma(m * kappa) - std::lgamma(kappa) -
                               std::lgamma((m - 1) * kappa));
  const double expo = (m - 1) * kappa - 1.0;
  g.density = [norm, kappa, expo](double t) {
    if (!(t > 0.0)) return 0.0;
    return norm * std::exp(-kappa * t) * std::pow(-std::expm1(-t), expo);
  };
  g.laplace = [kappa, m](Complex s) {
    return gamma_case_lifetime_laplace(kappa, m, s);
  };
  g.support_note = "(0, inf), exp-beta family";
  g.t_max = 45.0 / kappa + 5.0;
  return g;
}

LimitLaw LimitLaw::gamma_limit(double kappa) {
  if (!(kappa > 0.0)) throw precondition_error("gamma_limit: kappa must be > 0");
  LimitLaw law;
  law.laplace = [kappa](Complex u) {
    return std::exp(-kappa * std::log(1.0 + u));
  };
  law.mellin.plus = [kappa](Complex s) {
    return gamma_ratio(s + kappa - 1.0, Complex(kappa));
  };
  law.mellin.strip = {1.0 - kappa, kUnbounded};
  law.mellin.has_minus = false;
  law.decay = 1.0;
  return law;
}

double malthusian(const OffspringPGF& f, const LifetimeDistribution& g,
                  Interval bracket) {
  f.validate(/*require_supercritical=*/false, /*allow_extinction=*/true);
  const double mu = f.mean();
  auto residual = [&](double y) {
    return mu * g.laplace(Complex(y, 0.0)).real() - 1.0;
  };
  double lo = bracket.lo, hi = bracket.hi;
  double rlo = residual(lo), rhi = residual(hi);
  if (!(rlo > 0.0 && rhi < 0.0))
    throw precondition_error(
        "malthusian: no sign change in bracket (is the process supercritical?)");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double rm = residual(mid);
    if (std::abs(rm) <= 1e-12) return mid;
    (rm > 0.0 ? lo : hi) = mid;
  }
  const double beta = 0.5 * (lo + hi);
  if (std::abs(residual(beta)) > 1e-12)
    throw numerics_error("malthusian: bisection failed to reach 1e-12");
  return beta;
}

Complex recover_lifetime_laplace(const LimitLaw& psi, const OffspringPGF& f,
                                 Complex s, const BromwichLine& beta_line) {
  if (!(s.real() > 0.0))
    throw precondition_error("recover_lifetime_laplace: Re(s) must be > 0");
  const double beta = beta_line.abscissa;
  if (!(beta < 0.0) || !(-beta < psi.decay))
    throw precondition_error(
        "recover_lifetime_laplace: need beta < 0 with -beta below the limit "
        "density's decay rate");
  f.validate(/*require_supercritical=*/false, /*allow_extinction=*/false);

  auto line_integral = [&](const std::function<Complex(Complex)>& num) {
    ComplexFunction integrand{
        [&num, s](Complex u) {
          return num(u) * std::exp(-(s + 1.0) * std::log(-u));
        },
        "life-time recovery integrand"};
    return integrate_bromwich(integrand, beta_line);
  };
  const Complex numerator = line_integral(psi.laplace);
  const Complex denominator =
      line_integral([&](Complex u) { return f.value(psi.laplace(u)); });
  if (std::abs(denominator) < 1e-14)
    throw numerics_error("recover_lifetime_laplace: vanishing denominator");
  return numerator / denominator;
}

Complex gamma_case_lifetime_laplace(double kappa, int m, Complex s) {
  if (!(kappa > 0.0) || m < 2)
    throw precondition_error("gamma_case_lifetime_laplace: bad parameters");
  return std::exp(log_gamma(s + kappa) + log_gamma(Complex(m * kappa)) -
                  log_gamma(s + m * kappa) - log_gamma(Complex(kappa)));
}

double gamma_case_lifetime_density(double kappa, int m, double t) {
  if (!(t > 0.0))
    throw precondition_error("gamma_case_lifetime_density: t must be > 0");
  if (!(kappa > 0.0) || m < 2 || !((m - 1) * kappa > 0.0))
    throw precondition_error("gamma_case_lifetime_density: bad parameters");
  return LifetimeDistribution::gamma_case(kappa, m).density(t);
}

Complex poly_case_lifetime_laplace(const OffspringPGF& f, double kappa,
                                   Complex s) {
  if (!(kappa > 0.0))
    throw precondition_error("poly_case_lifetime_laplace: kappa must be > 0");
  f.validate(/*require_supercritical=*/false, /*allow_extinction=*/false);
  Complex denom = 0.0;
  for (size_t j = 1; j < f.probs.size(); ++j) {
    if (f.probs[j] == 0.0) continue;
    denom += f.probs[j] * std::exp(log_gamma(s + double(j) * kappa) -
                                   log_gamma(Complex(double(j) * kappa)));
  }
  if (std::abs(denom) < 1e-280)
    throw numerics_error("poly_case_lifetime_laplace: vanishing denominator");
  return std::exp(log_gamma(s + kappa) - log_gamma(Complex(kappa))) / denom;
}

double fixed_point_residual(const LimitLaw& psi, const OffspringPGF& f,
                            const LifetimeDistribution& g, double beta,
                            double u) {
  if (u < 0.0 || !(beta > 0.0))
    throw precondition_error("fixed_point_residual: need u >= 0 and beta > 0");
  if (u == 0.0) return std::abs(psi.laplace(0.0) - f.value(1.0));
  // int f(psi(u e^{-beta t})) dG(t) in t = e^v; the density may carry an
  // integrable power singularity at 0.
  const Complex integral = integrate_gl_panels(
      [&](double v) {
        const double t = std::exp(v);
        const Complex inner = psi.laplace(Complex(u * std::exp(-beta * t), 0.0));
        return f.value(inner) * g.density(t) * t;
      },
      -70.0, std::log(g.t_max), 320);
  return std::abs(psi.laplace(Complex(u, 0.0)) - integral);
}

LifetimeSampler::LifetimeSampler(const LifetimeDistribution& g, int grid) {
  if (grid < 64) throw precondition_error("LifetimeSampler: grid too small");
  t_.resize(grid + 1);
  cdf_.resize(grid + 1);
  // Quadratic grading toward 0 absorbs t^{p-1}-type density singularities
  // (t = tau^2 turns them into tau^{2p-1}).
  const double tau_max = std::sqrt(g.t_max);
  auto by_tau = [&](double tau) { return g.density(tau * tau) * 2.0 * tau; };
  t_[0] = 0.0;
  cdf_[0] = 0.0;
  const double h = tau_max / grid;
  for (int i = 0; i < grid; ++i) {
    const double a = i * h, b = a + h;
    cdf_[i + 1] = cdf_[i] +
                  h / 6.0 * (by_tau(a) + 4.0 * by_tau(0.5 * (a + b)) + by_tau(b));
    t_[i + 1] = b * b;
  }
  const double total = cdf_.back();
  if (!(total > 0.9) || !(total < 1.1))
    throw numerics_error("LifetimeSampler: density mass far from 1");
  for (auto& c : cdf_) c /= total;
  // Fritsch-Carlson monotone slopes for the cubic Hermite interpolant.
  const int n = grid + 1;
  slope_.assign(n, 0.0);
  std::vector<double> d(grid);
  for (int i = 0; i < grid; ++i)
    d[i] = (cdf_[i + 1] - cdf_[i]) / (t_[i + 1] - t_[i]);
  slope_[0] = d[0];
  slope_[n - 1] = d[grid - 1];
  for (int i = 1; i < n - 1; ++i)
    slope_[i] = (d[i - 1] * d[i] > 0.0)
                    ? 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i])
                    : 0.0;
}

double LifetimeSampler::sample(double u) const {
  u = std::min(std::max(u, 0.0), 1.0 - 1e-12);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  size_t i = std::min<size_t>(std::max<std::ptrdiff_t>(it - cdf_.begin() - 1, 0),
                              cdf_.size() - 2);
  const double h = t_[i + 1] - t_[i];
  auto eval = [&](double x) {  // Hermite cubic on [t_i, t_{i+1}]
    const double s = (x - t_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    return cdf_[i] * (2 * s3 - 3 * s2 + 1) + h * slope_[i] * (s3 - 2 * s2 + s) +
           cdf_[i + 1] * (-2 * s3 + 3 * s2) + h * slope_[i + 1] * (s3 - s2);
  };
  double lo = t_[i], hi = t_[i + 1];
  double x = 0.5 * (lo + hi);
  for (int it2 = 0; it2 < 60; ++it2) {
    const double f = eval(x) - u;
    if (std::abs(f) < 1e-14) break;
    (f > 0.0 ? hi : lo) = x;
    x = 0.5 * (lo + hi);
  }
  return x;
}

BranchingSummary simulate_bellman_harris(const OffspringPGF& f,
                                         const LifetimeDistribution& g,
                                         double horizon, std::int64_t replicas,
                                         std::uint64_t seed, int threads) {
  f.validate(/*require_supercritical=*/false, /*allow_extinction=*/true);
  if (!(horizon > 0.0) || replicas < 1)
    throw precondition_error("simulate_bellman_harris: bad horizon/replicas");
  // Expected-population guard: e^{beta T} must stay within budget.
  if (f.mean() > 1.0) {
    const double beta = malthusian(f, g, {1e-9, 64.0});
    if (beta * horizon > std::log(1e6))
      throw precondition_error(
          "simulate_bellman_harris: expected population exceeds 1e6 at this "
          "horizon");
  }
  const LifetimeSampler sampler(g);
  std::vector<double> cumulative(f.probs.size());
  double acc = 0.0;
  for (size_t j = 0; j < f.probs.size(); ++j)
    cumulative[j] = (acc += f.probs[j]);

  BranchingSummary out;
  out.population.assign(replicas, 0.0);
  out.horizon = horizon;
  out.seed = seed;
  if (threads <= 0) threads = int(std::thread::hardware_concurrency());

  parallel_for(replicas, threads, [&](std::int64_t r) {
    Rng rng(seed, std::uint64_t(r));
    std::priority_queue<double, std::vector<double>, std::greater<double>> deaths;
    deaths.push(sampler.sample(rng.uniform()));
    while (!deaths.empty() && deaths.top() <= horizon) {
      const double t = deaths.top();
      deaths.pop();
      const double u = rng.uniform();
      size_t j = 0;
      while (j + 1 < cumulative.size() && u >= cumulative[j]) ++j;
      for (size_t c = 0; c < j; ++c)
        deaths.push(t + sampler.sample(rng.uniform()));
      if (std::int64_t(deaths.size()) > kPopulationGuard)
        throw numerics_error(
            "simulate_bellman_harris: population explosion guard tripped");
    }
    out.population[r] = double(deaths.size());
  });

  double mean = 0.0;
  for (double z : out.population) mean += z;
  out.mean_population = mean / double(replicas);
  return out;
}

}  // namespace mellin
