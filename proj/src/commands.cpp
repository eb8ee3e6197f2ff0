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
#include "mellin/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "mellin/acceptance.hpp"
#include "mellin/bellman_harris.hpp"
#include "mellin/complex_gamma.hpp"
#include "mellin/densities.hpp"
#include "mellin/errors.hpp"
#include "mellin/hankel.hpp"
#include "mellin/luria_delbruck.hpp"
#include "mellin/mellin_transform.hpp"
#include "mellin/rng.hpp"
#include "mellin/stable.hpp"
#include "mellin/version.hpp"

namespace mellin {

namespace {

namespace dens = mellin::densities;

class ParamReader {
 public:
  explicit ParamReader(const RunConfig& config) : config_(config) {}

  double number(const std::string& key, double fallback) const {
    auto it = config_.params.find(key);
    if (it == config_.params.end()) return fallback;
    return parse(key, it->second);
  }
  double required(const std::string& key) const {
    auto it = config_.params.find(key);
    if (it == config_.params.end())
      throw precondition_error("missing required parameter '" + key + "'");
    return parse(key, it->second);
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = config_.params.find(key);
    return it == config_.params.end() ? fallback : it->second;
  }
  std::vector<double> grid(const std::string& key, GridSpec fallback) const {
    auto it = config_.grids.find(key);
    return (it == config_.grids.end() ? fallback : it->second).points();
  }

 private:
  static double parse(const std::string& key, const std::string& value) {
    try {
      size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing text");
      return v;
    } catch (const std::exception&) {
      throw precondition_error("parameter '" + key + "' is not a number: '" +
                               value + "'");
    }
  }
  const RunConfig& config_;
};

using CommandFn = std::function<void(const RunConfig&, const ParamReader&,
                                     RunReport&)>;

// --- individual commands ---------------------------------------------------

void cmd_stable_mellin(const RunConfig&, const ParamReader& p, RunReport& out) {
  const StableParams params(p.required("alpha"), p.number("theta", 0.0));
  for (double s : p.grid("s", {0.1, 0.9, 9})) {
    const auto numeric = stable_mellin_numeric(params, s);
    const Complex cp = stable_mellin(params, Complex(s), Side::plus);
    const Complex cm = stable_mellin(params, Complex(s), Side::minus);
    std::map<std::string, double> in{
        {"alpha", params.alpha}, {"theta", params.theta}, {"s", s}};
    out.add("closed_plus", in, cp.real());
    out.add("closed_minus", in, cm.real());
    out.add("numeric_plus", in, numeric.first.real(),
            std::abs(numeric.first - cp));
    out.add("numeric_minus", in, numeric.second.real(),
            std::abs(numeric.second - cm));
  }
}

void cmd_stable_density(const RunConfig&, const ParamReader& p,
                        RunReport& out) {
  const StableParams params(p.required("alpha"), p.number("theta", 0.0));
  const double gamma_line = p.number("gamma", 0.5);
  const auto line = stable_inversion_line(params);
  for (double x : p.grid("x", {-4.0, 4.0, 17})) {
    if (x == 0.0) continue;
    QuadStatus status;
    const double d = stable_density(params, x, gamma_line, line, &status);
    out.add("density",
            {{"alpha", params.alpha}, {"theta", params.theta}, {"x", x}}, d,
            status.tail_magnitude);
  }
}

void cmd_ml_eval(const RunConfig&, const ParamReader& p, RunReport& out) {
  const MLOrder nu(p.required("nu"));
  const double tol = p.number("tol", 1e-10);
  for (double u : p.grid("u", {0.0, 5.0, 11})) {
    const auto contour = HankelContour::for_argument(nu.nu, u);
    const Complex h = mittag_leffler_hankel(nu, u, contour);
    std::map<std::string, double> in{{"nu", nu.nu}, {"u", u}};
    try {
      const Complex s = mittag_leffler_series(nu, u, tol);
      out.add("series", in, s.real(), tol * std::abs(s));
      out.add("hankel", in, h.real(), std::abs(h - s));
    } catch (const series_overflow_error&) {
      out.add("hankel", in, h.real(), std::abs(h.imag()));
    }
  }
}

void cmd_mellin_check(const RunConfig&, const ParamReader&, RunReport& out) {
  const auto expd = dens::one_sided_exponential();
  double scaling = 0.0;
  for (double lambda : {0.5, 2.0, 10.0}) {
    const auto fl = dens::scaled(expd, lambda);
    for (double s : {0.4, 1.0, 2.3}) {
      scaling = std::max(
          scaling, std::abs(mellin_forward(fl, Complex(s)).first -
                            std::pow(lambda, -s) *
                                mellin_forward(expd, Complex(s)).first));
    }
  }
  out.add("scaling_law_deviation", {}, scaling, 0.0);

  double power = 0.0;
  for (double mu : {0.5, 2.0}) {
    const auto fm = dens::powered(expd, mu);
    for (double s : {0.8, 1.6})
      power = std::max(power,
                       std::abs(mellin_forward(fm, Complex(s)).first -
                                mellin_forward(expd, Complex(s / mu)).first /
                                    mu));
  }
  out.add("power_law_deviation", {}, power, 0.0);

  const auto f2 = dens::symmetric_exponential();
  const auto g2 = dens::asymmetric_exponential(0.7, 1.0, 2.0);
  const auto mf = mellin_forward_pair(f2);
  const auto mg = mellin_forward_pair(g2);
  double conv_dev = 0.0;
  {
    DensityOnR conv;
    conv.plus = [f2, g2](double z) { return mellin_convolve(f2, g2, z); };
    conv.minus = [f2, g2](double z) { return mellin_convolve(f2, g2, -z); };
    conv.strip_plus = conv.strip_minus = {0.0, kUnbounded};
    conv.decay_plus = conv.decay_minus = 0.2;
    conv.support_minus = {0.0, kUnbounded};
    conv.steps = 1600;
    for (double s : {0.7, 1.4}) {
      const auto direct = mellin_forward(conv, Complex(s));
      const auto product = hyperbolic_product(mf, mg, Complex(s));
      conv_dev = std::max({conv_dev, std::abs(direct.first - product.first),
                           std::abs(direct.second - product.second)});
    }
  }
  out.add("convolution_theorem_deviation", {}, conv_dev, 0.0);

  double invert_dev = 0.0;
  {
    auto m = mellin_forward_pair(expd);
    BromwichLine line;
    line.half_height = 40.0;
    line.steps = 2000;
    for (double x : {0.3, 1.0, 2.5})
      invert_dev = std::max(
          invert_dev, std::abs(mellin_invert(m, x, 1.0, line) - std::exp(-x)));
  }
  out.add("inversion_roundtrip_deviation", {}, invert_dev, 0.0);

  BromwichLine line;
  line.half_height = 60.0;
  line.steps = 3000;
  const auto [le, re_] = plancherel_check(expd, expd, 0.5, line);
  out.add("plancherel_exponential_deviation", {}, std::abs(le - re_), 0.0);
  const auto uni = dens::uniform01();
  const auto [lu, ru] = plancherel_check(uni, uni, 0.5, line);
  out.add("plancherel_uniform_deviation", {}, std::abs(lu - ru), 0.0);
}

void cmd_plancherel(const RunConfig&, const ParamReader& p, RunReport& out) {
  const std::string which = p.text("density", "exponential");
  DensityOnR d;
  if (which == "exponential")
    d = dens::one_sided_exponential();
  else if (which == "uniform")
    d = dens::uniform01();
  else
    throw precondition_error("plancherel: density must be exponential|uniform");
  const double gamma_line = p.number("gamma", 0.5);
  BromwichLine line;
  line.half_height = 60.0;
  line.steps = 3000;
  const auto [lhs, rhs] = plancherel_check(d, d, gamma_line, line);
  out.add("lhs_contour", {{"gamma", gamma_line}}, lhs);
  out.add("rhs_halfline", {{"gamma", gamma_line}}, rhs);
  out.add("difference", {{"gamma", gamma_line}}, std::abs(lhs - rhs));
}

OffspringPGF offspring_from(const ParamReader& p) {
  const std::string pgf = p.text("pgf", "");
  if (!pgf.empty()) {
    std::vector<double> probs;
    std::stringstream ss(pgf);
    std::string item;
    while (std::getline(ss, item, ','))
      probs.push_back(std::stod(item));
    auto f = OffspringPGF::from_probs(std::move(probs));
    f.validate(false, false);
    return f;
  }
  return OffspringPGF::deterministic(int(p.number("m", 2)));
}

void cmd_bh_recover(const RunConfig&, const ParamReader& p, RunReport& out) {
  const double kappa = p.number("kappa", 1.0);
  const auto f = offspring_from(p);
  const auto psi = LimitLaw::gamma_limit(kappa);
  BromwichLine line;
  line.abscissa = -0.5;
  line.half_height = 200.0;
  line.steps = 20000;
  line = line.with_log_tails(1e10, 900);
  for (double s : p.grid("s", {0.5, 2.0, 4})) {
    const Complex contour =
        recover_lifetime_laplace(psi, f, Complex(s), line);
    const Complex closed = poly_case_lifetime_laplace(f, kappa, Complex(s));
    std::map<std::string, double> in{{"kappa", kappa}, {"s", s}};
    out.add("contour_ratio", in, contour.real(), std::abs(contour - closed));
    out.add("closed_form", in, closed.real());
  }
}

void cmd_bh_fixed_point(const RunConfig&, const ParamReader& p,
                        RunReport& out) {
  const double kappa = p.number("kappa", 1.0);
  const int m = int(p.number("m", 2));
  const double beta = p.number("beta", 1.0);
  const auto f = OffspringPGF::deterministic(m);
  const auto psi = LimitLaw::gamma_limit(kappa);
  const auto g = LifetimeDistribution::gamma_case(kappa, m);
  for (double u : p.grid("u", {0.1, 5.0, 8})) {
    out.add("fixed_point_residual",
            {{"kappa", kappa}, {"m", double(m)}, {"u", u}},
            fixed_point_residual(psi, f, g, beta, u));
  }
}

void cmd_bh_simulate(const RunConfig& config, const ParamReader& p,
                     RunReport& out) {
  const auto f = offspring_from(p);
  const double rate = p.number("rate", 1.0);
  const double horizon = p.number("horizon", 5.0);
  const std::int64_t replicas = std::int64_t(p.number("replicas", 10000));
  const auto g = LifetimeDistribution::exponential(rate);
  const auto sim = simulate_bellman_harris(f, g, horizon, replicas,
                                           config.seed, config.threads);
  out.add("mean_population", {{"horizon", horizon}}, sim.mean_population);
  const bool yule = f.probs.size() == 3 && f.probs[2] == 1.0 && rate == 1.0;
  const double beta = malthusian(f, g, {1e-9, 64.0});
  const double scale = std::exp(-beta * horizon);
  for (double u : p.grid("u", {0.5, 2.0, 4})) {
    double lap = 0.0, lap2 = 0.0;
    for (double z : sim.population) {
      const double v = std::exp(-u * z * scale);
      lap += v;
      lap2 += v * v;
    }
    lap /= double(replicas);
    lap2 /= double(replicas);
    const double se = std::sqrt(
        std::max(lap2 - lap * lap, 0.0) / double(replicas));
    out.add("empirical_laplace", {{"u", u}, {"horizon", horizon}}, lap, se);
    if (yule)
      out.add("limit_laplace", {{"u", u}, {"horizon", horizon}},
              1.0 / (1.0 + u));
  }
}

void cmd_ld_simulate(const RunConfig& config, const ParamReader& p,
                     RunReport& out) {
  const LDParams params(p.required("rho"), int(p.number("kappa", 1)));
  const std::int64_t n = std::int64_t(p.number("n", 10000));
  const std::int64_t replicas = std::int64_t(p.number("replicas", 100000));
  auto samples = simulate_ld(params, n, replicas, config.seed, config.threads);
  const double norm = std::pow(double(n), 1.0 - params.rho);
  double m_half = 0.0, m1 = 0.0, m2 = 0.0;
  for (double L : samples) {
    const double l = L / norm;
    m_half += std::sqrt(l);
    m1 += l;
    m2 += l * l;
  }
  m_half /= double(replicas);
  m1 /= double(replicas);
  m2 /= double(replicas);
  const std::map<std::string, double> in{
      {"rho", params.rho}, {"kappa", double(params.kappa)}, {"n", double(n)}};
  out.add("m2_ratio_empirical", in, m2 / (m1 * m1));
  out.add("m2_ratio_analytic", in,
          (ld_mellin(params, Complex(3.0)) /
           (ld_mellin(params, Complex(2.0)) * ld_mellin(params, Complex(2.0))))
              .real());
  out.add("half_ratio_empirical", in, m_half * m_half / m1);
  out.add("half_ratio_analytic", in,
          (ld_mellin(params, Complex(1.5)) * ld_mellin(params, Complex(1.5)) /
           ld_mellin(params, Complex(2.0)))
              .real());
  // The kappa-dependent normalization implicit in the limit statement is
  // reported, not asserted.
  out.add("scale_factor_empirical", in,
          m1 / ld_mellin(params, Complex(2.0)).real());
}

void cmd_ld_limit(const RunConfig&, const ParamReader& p, RunReport& out) {
  const LDParams params(p.required("rho"), int(p.number("kappa", 1)));
  for (double u : p.grid("u", {0.0, 3.0, 13})) {
    std::map<std::string, double> in{
        {"rho", params.rho}, {"kappa", double(params.kappa)}, {"u", u}};
    const double lap = ld_laplace(params, u, 1e-11);
    out.add("ld_laplace", in, lap, 1e-11);
    if (params.kappa == 1) {
      const double ml =
          mittag_leffler_series(MLOrder(1.0 - params.rho), u, 1e-11).real();
      out.add("ml_series", in, ml, std::abs(ml - lap));
    }
  }
  for (double s : p.grid("s", {1.0, 3.0, 5})) {
    std::map<std::string, double> in{
        {"rho", params.rho}, {"kappa", double(params.kappa)}, {"s", s}};
    out.add("ld_mellin", in, ld_mellin(params, Complex(s)).real());
  }
}

void cmd_acceptance(const RunConfig& config, const ParamReader& p,
                    RunReport& out) {
  std::vector<int> subset;
  const std::string which = p.text("criteria", "");
  if (!which.empty()) {
    std::stringstream ss(which);
    std::string item;
    while (std::getline(ss, item, ',')) subset.push_back(std::stoi(item));
  }
  bool all_passed = true;
  for (const auto& r : acceptance::run(subset, config.threads)) {
    out.add("criterion_" + std::to_string(r.index),
            {{"budget_seconds", r.budget_seconds},
             {"elapsed_seconds", r.elapsed_seconds}},
            r.passed ? 1.0 : 0.0, r.worst);
    all_passed = all_passed && r.passed;
  }
  if (!all_passed)
    throw numerics_error("acceptance: one or more criteria failed");
}

const std::map<std::string, CommandFn>& command_table() {
  static const std::map<std::string, CommandFn> table = {
      {"stable-mellin", cmd_stable_mellin},
      {"stable-density", cmd_stable_density},
      {"ml-eval", cmd_ml_eval},
      {"mellin-check", cmd_mellin_check},
      {"plancherel", cmd_plancherel},
      {"bh-recover", cmd_bh_recover},
      {"bh-fixed-point", cmd_bh_fixed_point},
      {"bh-simulate", cmd_bh_simulate},
      {"ld-simulate", cmd_ld_simulate},
      {"ld-limit", cmd_ld_limit},
      {"acceptance", cmd_acceptance},
  };
  return table;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> pts;
  if (count <= 1) {
    pts.push_back(start);
    return pts;
  }
  // Closed form per index avoids accumulating float steps.
  for (int i = 0; i < count; ++i)
    pts.push_back(start + (stop - start) * double(i) / double(count - 1));
  return pts;
}

GridSpec parse_grid_spec(const std::string& text) {
  GridSpec spec;
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
      !std::getline(ss, c))
    throw precondition_error("grid must be start:stop:count, got '" + text +
                             "'");
  try {
    spec.start = std::stod(a);
    spec.stop = std::stod(b);
    spec.count = std::stoi(c);
  } catch (const std::exception&) {
    throw precondition_error("grid must be start:stop:count, got '" + text +
                             "'");
  }
  if (spec.count < 1)
    throw precondition_error("grid count must be >= 1");
  return spec;
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  outcome.report.command = config.command;
  outcome.report.params = config.params;
  outcome.report.seed = config.seed;
  outcome.report.version = library_version;

  const auto it = command_table().find(config.command);
  if (it == command_table().end()) {
    outcome.exit_code = 2;
    outcome.error = "unknown command '" + config.command + "'";
    return outcome;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(config, ParamReader(config), outcome.report);
  } catch (const precondition_error& e) {
    outcome.exit_code = 2;
    outcome.error = e.what();
    outcome.report.results.clear();  // no partial output on invalid input
  } catch (const numerics_error& e) {
    outcome.exit_code = 3;  // partial report retained
    outcome.error = e.what();
  }
  outcome.report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return outcome;
}

}  // namespace mellin
