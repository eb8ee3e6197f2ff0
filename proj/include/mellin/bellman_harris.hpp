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
#include <string>
#include <vector>

#include "mellin/contour.hpp"
#include "mellin/mellin_transform.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

/// First-generation offspring distribution {pi_j}: probs[j] = pi_j.
/// Recovery formulas require pi_0 = 0; the simulator tolerates extinction.
struct OffspringPGF {
  std::vector<double> probs;

  /// pi_m = 1 (every split produces exactly m children).
  static OffspringPGF deterministic(int m);
  static OffspringPGF from_probs(std::vector<double> probs);

  double mean() const;
  Complex value(Complex s) const;
  int max_children() const { return int(probs.size()) - 1; }
  void validate(bool require_supercritical, bool allow_extinction) const;
};

/// Life-time distribution G on (0, inf) with G(0+) = 0, carried as a density
/// together with its Laplace transform.
struct LifetimeDistribution {
  std::function<double(double)> density;
  std::function<Complex(Complex)> laplace;
  std::string support_note;
  double t_max = 45.0;  // quadrature/sampling truncation

  static LifetimeDistribution exponential(double rate);
  /// The family recovered from a Gamma(kappa) limit law with f(s) = s^m:
  ///   dG/dt = Gamma(m kappa)/(Gamma(kappa) Gamma((m-1) kappa))
  ///           e^{-kappa t} (1 - e^{-t})^{(m-1) kappa - 1}.
  static LifetimeDistribution gamma_case(double kappa, int m);
};

/// Postulated limit law of chi_t Z_t: Laplace transform psi, Mellin pair of
/// its density, and the density's exponential tail rate.
struct LimitLaw {
  std::function<Complex(Complex)> laplace;
  MellinPair mellin;
  double decay = 1.0;

  /// Gamma(kappa, 1) limit: psi(u) = (1 + u)^{-kappa}.
  static LimitLaw gamma_limit(double kappa);
};

/// Unique positive root of mean * int e^{-y t} dG(t) = 1, by bisection to
/// |residual| <= 1e-12.  Throws when the bracket holds no sign change (e.g.
/// subcritical offspring).
double malthusian(const OffspringPGF& f, const LifetimeDistribution& g,
                  Interval bracket);

/// Life-time Laplace transform recovered from the limit law:
///   int e^{-ts} dG(t) = int psi(u)(-u)^{-s-1} du / int f(psi(u))(-u)^{-s-1} du
/// over the vertical line Re(u) = beta_line.abscissa < 0.
Complex recover_lifetime_laplace(const LimitLaw& psi, const OffspringPGF& f,
                                 Complex s, const BromwichLine& beta_line);

/// Gamma(s + kappa) Gamma(m kappa) / (Gamma(s + m kappa) Gamma(kappa)).
Complex gamma_case_lifetime_laplace(double kappa, int m, Complex s);

/// Density of the gamma-case G at t > 0.
double gamma_case_lifetime_density(double kappa, int m, double t);

/// [Gamma(s + kappa)/Gamma(kappa)] / sum_j pi_j Gamma(s + j kappa)/Gamma(j kappa).
Complex poly_case_lifetime_laplace(const OffspringPGF& f, double kappa,
                                   Complex s);

/// |psi(u) - int f(psi(u e^{-beta t})) dG(t)|.
double fixed_point_residual(const LimitLaw& psi, const OffspringPGF& f,
                            const LifetimeDistribution& g, double beta,
                            double u);

/// Inverse-CDF sampler over a monotone-cubic interpolant of the numeric CDF
/// (4096-point grid, quadratically graded toward t = 0).
class LifetimeSampler {
 public:
  explicit LifetimeSampler(const LifetimeDistribution& g, int grid = 4096);
  double sample(double uniform01) const;

 private:
  std::vector<double> t_, cdf_, slope_;
};

struct BranchingSummary {
  std::vector<double> population;  // Z_T per replica
  double mean_population = 0.0;
  double horizon = 0.0;
  std::uint64_t seed = 0;
};

/// Event-driven Bellman-Harris simulation: every individual draws a G
/// life-time and is replaced at death by j children with probability pi_j.
/// Replicas own derived RNG streams and write to their own slots, so the
/// output is deterministic in (seed, replicas) for any thread count.
BranchingSummary simulate_bellman_harris(const OffspringPGF& f,
                                         const LifetimeDistribution& g,
                                         double horizon, std::int64_t replicas,
                                         std::uint64_t seed, int threads = 0);

}  // namespace mellin
