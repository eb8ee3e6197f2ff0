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
#include "mellin/densities.hpp"

#include <cmath>

#include "mellin/errors.hpp"

namespace mellin::densities {

DensityOnR one_sided_exponential() {
  DensityOnR d;
  d.plus = [](double x) { return std::exp(-x); };
  d.strip_plus = {0.0, kUnbounded};
  d.decay_plus = 1.0;
  return d;
}

DensityOnR symmetric_exponential() {
  DensityOnR d;
  d.plus = d.minus = [](double x) { return 0.5 * std::exp(-x); };
  d.strip_plus = d.strip_minus = {0.0, kUnbounded};
  d.decay_plus = d.decay_minus = 1.0;
  d.support_minus = {0.0, kUnbounded};
  return d;
}

DensityOnR symmetric_exponential_unnormalized() {
  DensityOnR d = symmetric_exponential();
  d.plus = d.minus = [](double x) { return std::exp(-x); };
  return d;
}

DensityOnR uniform01() {
  DensityOnR d;
  d.plus = [](double x) { return x < 1.0 ? 1.0 : 0.0; };
  d.strip_plus = {0.0, kUnbounded};
  d.support_plus = {0.0, 1.0};
  return d;
}

DensityOnR asymmetric_exponential(double p_plus, double rate_plus,
                                  double rate_minus) {
  if (!(p_plus >= 0.0 && p_plus <= 1.0) || !(rate_plus > 0.0) ||
      !(rate_minus > 0.0))
    throw precondition_error("asymmetric_exponential: invalid parameters");
  DensityOnR d;
  d.plus = [=](double x) { return p_plus * rate_plus * std::exp(-rate_plus * x); };
  d.minus = [=](double x) {
    return (1.0 - p_plus) * rate_minus * std::exp(-rate_minus * x);
  };
  d.strip_plus = d.strip_minus = {0.0, kUnbounded};
  d.decay_plus = rate_plus;
  d.decay_minus = rate_minus;
  d.support_minus = {0.0, kUnbounded};
  return d;
}

DensityOnR narrow_gaussian_at_one(double sigma) {
  if (!(sigma > 0.0 && sigma < 0.2))
    throw precondition_error("narrow_gaussian_at_one: sigma must be in (0, 0.2)");
  DensityOnR d;
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * M_PI));
  d.plus = [=](double x) {
    const double z = (x - 1.0) / sigma;
    return norm * std::exp(-0.5 * z * z);
  };
  d.strip_plus = {-kUnbounded, kUnbounded};
  d.support_plus = {1.0 - 8.0 * sigma, 1.0 + 8.0 * sigma};
  return d;
}

DensityOnR scaled(const DensityOnR& f, double lambda) {
  if (!(lambda > 0.0)) throw precondition_error("scaled: lambda must be > 0");
  DensityOnR d = f;
  auto scale_side = [lambda](std::function<double(double)>& fn,
                             Interval& support, double& decay) {
    auto base = fn;
    fn = [base, lambda](double x) { return base(lambda * x); };
    support = {support.lo / lambda,
               support.hi < kUnbounded ? support.hi / lambda : kUnbounded};
    decay *= lambda;
  };
  scale_side(d.plus, d.support_plus, d.decay_plus);
  scale_side(d.minus, d.support_minus, d.decay_minus);
  return d;
}

DensityOnR powered(const DensityOnR& f, double mu) {
  if (!(mu > 0.0)) throw precondition_error("powered: mu must be > 0");
  DensityOnR d = f;
  auto base = f.plus;
  d.plus = [base, mu](double x) { return base(std::pow(x, mu)); };
  d.support_plus = {std::pow(f.support_plus.lo, 1.0 / mu),
                    f.support_plus.hi < kUnbounded
                        ? std::pow(f.support_plus.hi, 1.0 / mu)
                        : kUnbounded};
  // Tail e^{-decay x^mu}: choose an effective exponential rate that reaches
  // e^{-45} at the same abscissa.
  if (f.support_plus.hi >= kUnbounded)
    d.decay_plus = 45.0 / std::pow(45.0 / f.decay_plus, 1.0 / mu);
  d.strip_plus = {f.strip_plus.lo * mu,
                  f.strip_plus.hi < kUnbounded ? f.strip_plus.hi * mu
                                               : kUnbounded};
  d.minus = [](double) { return 0.0; };
  d.support_minus = {0.0, 0.0};
  return d;
}

}  // namespace mellin::densities
