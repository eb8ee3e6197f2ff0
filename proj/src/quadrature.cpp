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
#include "mellin/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

std::vector<std::pair<double, double>> compute_gauss_legendre(int order) {
  std::vector<std::pair<double, double>> rule(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n(x) = 0.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <  1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule[i] = {-x, w};
    rule[order - 1 - i] = {x, w};
  }
  return rule;
}

}  // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

Extrapolated neville_to_zero(const std::vector<double>& xs,
                             const std::vector<Complex>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw precondition_error("neville_to_zero: node/value size mismatch");
  std::vector<Complex> t = ys;
  Complex best = t.back();
  double err = std::abs(t.back());
  const size_t n = xs.size();
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = 0; i + level < n; ++i) {
      // Value at x = 0 of the polynomial through nodes i .. i+level.
      t[i] = (xs[i + level] * t[i] - xs[i] * t[i + 1]) / (xs[i + level] - xs[i]);
    }
    err = std::abs(t[0] - best);
    best = t[0];
  }
  return {best, err};
}

}  // namespace mellin
