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
#include <map>
#include <memory>

#include "mellin/complex_gamma.hpp"
#include "mellin/densities.hpp"
#include "mellin/errors.hpp"
#include "mellin/hankel.hpp"
#include "mellin/mellin_transform.hpp"
#include "oracles.hpp"

using namespace mellin;
namespace dens = mellin::densities;

namespace {

BromwichLine short_line(double T = 60.0, double h = 0.01) {
  BromwichLine l;
  l.half_height = T;
  l.steps = int(T / h);
  return l;
}

MellinPair gamma_pair() {
  MellinPair m;
  m.plus = [](Complex s) { return gamma(s); };
  m.strip = {0.0, kUnbounded};
  return m;
}

}  // namespace

TEST_CASE("forward transform: exponential and two-sided examples") {
  const auto e = dens::one_sided_exponential();
  auto [p3, m3] = mellin_forward(e, Complex(3.0));
  CHECK(std::abs(p3 - 2.0) < 1e-10);
  CHECK(std::abs(m3) == 0.0);
  auto [ph, mh] = mellin_forward(e, Complex(0.5));
  CHECK(std::abs(ph - oracle::kGammaHalf) < 1e-10);

  const auto sym = dens::symmetric_exponential();
  auto [p1, m1] = mellin_forward(sym, Complex(1.0));
  CHECK(std::abs(p1 - 0.5) < 1e-10);
  CHECK(std::abs(m1 - 0.5) < 1e-10);
  CHECK(std::abs(total_mass(sym) - 1.0) < 1e-8);
  CHECK(std::abs(total_mass(dens::uniform01()) - 1.0) < 1e-8);
}

TEST_CASE("forward transform rejects strip violations") {
  const auto e = dens::one_sided_exponential();
  CHECK_THROWS_AS(mellin_forward(e, Complex(-0.5)), precondition_error);
}

TEST_CASE("scaling law M[f(lambda x); s] = lambda^{-s} M[f; s]") {
  const auto f = dens::one_sided_exponential();
  for (double lambda : {0.5, 2.0, 10.0}) {
    const auto fl = dens::scaled(f, lambda);
    for (double s : {0.4, 1.0, 2.3}) {
      const Complex lhs = mellin_forward(fl, Complex(s)).first;
      const Complex rhs =
          std::pow(lambda, -s) * mellin_forward(f, Complex(s)).first;
      CHECK(std::abs(lhs - rhs) < 1e-7 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("power law M[f(x^mu); s] = mu^{-1} M[f; s/mu]") {
  const auto f = dens::one_sided_exponential();
  for (double mu : {0.5, 2.0}) {
    const auto fm = dens::powered(f, mu);
    for (double s : {0.8, 1.6}) {
      const Complex lhs = mellin_forward(fm, Complex(s)).first;
      const Complex rhs = mellin_forward(f, Complex(s / mu)).first / mu;
      CHECK(std::abs(lhs - rhs) < 1e-7 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("mellin convolution: uniform times uniform is -log z") {
  const auto u = dens::uniform01();
  const double direct = oracle::integrate(
      [](double y) { return 1.0 / y; }, 0.5, 1.0);  // int_z^1 dy/y
  CHECK(std::abs(direct - 0.6931471805599453) < 1e-12);
  CHECK(std::abs(mellin_convolve(u, u, 0.5) - direct) < 1e-10);
}

TEST_CASE("mellin convolution: narrow bump at one is a product identity") {
  const auto f = dens::symmetric_exponential();
  const auto bump = dens::narrow_gaussian_at_one(0.01);
  for (double z : {0.7, 1.4, -0.9}) {
    // f (*) bump ~= f up to O(sigma^2) smearing.
    CHECK(std::abs(mellin_convolve(f, bump, z) - f.value(z)) < 1e-3);
  }
}

TEST_CASE("mellin convolution: symmetric inputs give a symmetric product") {
  const auto f = dens::symmetric_exponential();
  for (double z : {0.4, 1.1, 2.7}) {
    CHECK(std::abs(mellin_convolve(f, f, z) - mellin_convolve(f, f, -z)) <
          1e-8);
  }
}

TEST_CASE("mellin convolution flags dy/y divergence") {
  // A non-integrable input (constant mass out to infinity) leaves the dy/y
  // integrand flat at the open window ends.
  DensityOnR f;
  f.plus = [](double) { return 1.0; };
  f.strip_plus = {0.0, kUnbounded};
  f.decay_plus = 1e-3;
  CHECK_THROWS_AS(mellin_convolve(f, f, 1.0), numerics_error);
}

TEST_CASE("hyperbolic product: identity, sign flip, symmetric case") {
  const std::pair<Complex, Complex> id{1.0, 0.0};
  const std::pair<Complex, Complex> flip{0.0, 1.0};
  const std::pair<Complex, Complex> v{Complex(0.3, 0.1), Complex(-0.2, 0.4)};
  auto r = hyperbolic_product(id, v);
  CHECK(std::abs(r.first - v.first) == 0.0);
  CHECK(std::abs(r.second - v.second) == 0.0);
  auto ff = hyperbolic_product(flip, flip);
  CHECK(std::abs(ff.first - 1.0) == 0.0);
  CHECK(std::abs(ff.second) == 0.0);
}

TEST_CASE("hyperbolic product is commutative and associative") {
  const std::pair<Complex, Complex> a{Complex(0.3, 1.1), Complex(-0.7, 0.2)};
  const std::pair<Complex, Complex> b{Complex(1.4, -0.6), Complex(0.5, 0.9)};
  const std::pair<Complex, Complex> c{Complex(-0.8, 0.3), Complex(0.1, -1.2)};
  auto ab = hyperbolic_product(a, b);
  auto ba = hyperbolic_product(b, a);
  CHECK(std::abs(ab.first - ba.first) == 0.0);
  CHECK(std::abs(ab.second - ba.second) == 0.0);
  auto ab_c = hyperbolic_product(hyperbolic_product(a, b), c);
  auto a_bc = hyperbolic_product(a, hyperbolic_product(b, c));
  CHECK(std::abs(ab_c.first - a_bc.first) < 1e-15);
  CHECK(std::abs(ab_c.second - a_bc.second) < 1e-15);
}

TEST_CASE("convolution theorem on two-sided densities") {
  const auto f = dens::symmetric_exponential();
  const auto g = dens::asymmetric_exponential(0.7, 1.0, 2.0);
  const auto mf = mellin_forward_pair(f);
  const auto mg = mellin_forward_pair(g);
  DensityOnR conv;
  conv.plus = [f, g](double z) { return mellin_convolve(f, g, z); };
  conv.minus = [f, g](double z) { return mellin_convolve(f, g, -z); };
  conv.strip_plus = conv.strip_minus = {0.0, kUnbounded};
  // Product-of-exponentials tails decay like e^{-2 sqrt(z)}, not e^{-z}.
  conv.decay_plus = conv.decay_minus = 0.2;
  conv.support_minus = {0.0, kUnbounded};
  conv.steps = 1600;
  for (double s : {0.7, 1.0, 1.8}) {
    const auto direct = mellin_forward(conv, Complex(s));
    const auto product = hyperbolic_product(mf, mg, Complex(s));
    CHECK(std::abs(direct.first - product.first) < 1e-6);
    CHECK(std::abs(direct.second - product.second) < 1e-6);
  }
}

TEST_CASE("inversion: Gamma transform back to the exponential") {
  const auto m = gamma_pair();
  const auto line = short_line();
  CHECK(std::abs(mellin_invert(m, 1.0, 1.0, line) - std::exp(-1.0)) < 1e-9);
  CHECK(std::abs(mellin_invert(m, 3.0, 1.0, line) - std::exp(-3.0)) < 1e-9);
}

TEST_CASE("inversion: uniform density from 1/s with the regularizer") {
  MellinPair m;
  m.plus = [](Complex s) { return 1.0 / s; };
  m.strip = {0.0, kUnbounded};
  BromwichLine line;
  line.half_height = 200.0;
  line.steps = 20000;
  const auto r =
      mellin_invert_extrapolated(m, 0.5, 0.5, line, {0.03, 0.024, 0.02});
  CHECK(std::abs(r.value - 1.0) < 1e-7);
}

TEST_CASE("round trip: invert the numeric transform pointwise") {
  const auto f = dens::one_sided_exponential();
  auto m = mellin_forward_pair(f);
  const auto line = short_line(40.0, 0.02);
  for (double x : {0.3, 1.0, 2.5}) {
    CHECK(std::abs(mellin_invert(m, x, 1.0, line) - std::exp(-x)) < 1e-6);
  }
}

TEST_CASE("plancherel: exponential, uniform, zero") {
  const auto line = short_line(60.0, 0.02);
  const auto e = dens::one_sided_exponential();
  auto [l1, r1] = plancherel_check(e, e, 0.5, line);
  CHECK(std::abs(l1 - 0.5) < 1e-7);
  CHECK(std::abs(r1 - 0.5) < 1e-9);
  CHECK(std::abs(l1 - r1) < 1e-6);

  const auto u = dens::uniform01();
  auto [l2, r2] = plancherel_check(u, u, 0.5, line);
  CHECK(std::abs(l2 - 1.0) < 1e-6);
  CHECK(std::abs(r2 - 1.0) < 1e-9);

  DensityOnR zero;
  zero.support_plus = {0.0, 0.0};
  auto [l3, r3] = plancherel_check(zero, zero, 0.5, line);
  CHECK(l3 == 0.0);
  CHECK(r3 == 0.0);
}

TEST_CASE("laplace -> mellin bridge (one-sided exponential)") {
  BilateralLaplace phi{[](Complex u) { return 1.0 / (1.0 + u); },
                       {-1.0, kUnbounded}};
  BromwichLine line;
  line.abscissa = -0.5;
  line.half_height = 200.0;
  line.steps = 20000;
  // The integrand only decays like t^{-(s+1)} = t^{-1.5} here, so the
  // logarithmic tails must run deep.
  line = line.with_log_tails(1e18, 1600);
  auto [plus, minus] = mellin_from_laplace(phi, Complex(0.5), -0.5, line);
  CHECK(std::abs(plus - oracle::kGammaHalf) < 1e-8);
  CHECK(std::abs(minus) < 1e-8);
}

TEST_CASE("laplace -> mellin bridge (two-sided symmetry)") {
  // phi of e^{-|x|} is 2/(1 - u^2): the recovered pair must be symmetric.
  BilateralLaplace phi{[](Complex u) { return 2.0 / (1.0 - u * u); },
                       {-1.0, 1.0}};
  BromwichLine line;
  line.half_height = 200.0;
  line.steps = 20000;
  line = line.with_log_tails(1e18, 1600);
  auto [plus, minus] = mellin_from_laplace(phi, Complex(0.7), -0.5, line);
  CHECK(std::abs(plus - minus) < 1e-8);
  CHECK(std::abs(plus - gamma(Complex(0.7))) < 1e-8);
}

TEST_CASE("laplace -> mellin bridge (Mittag-Leffler transform)") {
  // phi = E_{1-rho} with rho = 0.5 recovers Gamma(s)/Gamma((1-rho)(s-1)+1).
  const double nu = 0.5;
  const auto contour = [&] {
    HankelContour c;
    c.radius = std::pow(0.1, 1.0 / nu);
    c.cutoff = c.radius + 42.0;
    return c;
  }();
  BilateralLaplace phi{[&](Complex u) {
                         return mittag_leffler_hankel(MLOrder(nu), u, contour);
                       },
                       {-kUnbounded, 0.0}};
  BromwichLine line;
  line.half_height = 60.0;
  line.steps = 2400;
  line = line.with_log_tails(1e8, 700);
  auto [plus, minus] = mellin_from_laplace(phi, Complex(2.0), -0.25, line);
  const double expected = 1.1283791670955126;  // Gamma(2)/Gamma(1.5)
  CHECK(std::abs(plus - expected) < 1e-6);
}

TEST_CASE("mellin -> laplace bridge and round trip") {
  const auto line = short_line(60.0, 0.01);
  // Gamma pair: phi(u) = 1/(1+u) at u = 1.
  CHECK(std::abs(laplace_from_mellin(gamma_pair(), Complex(1.0), 0.5, line) -
                 0.5) < 1e-8);
  // Uniform pair near u = 0: total mass.
  MellinPair uni;
  uni.plus = [](Complex s) { return 1.0 / s; };
  uni.strip = {0.0, kUnbounded};
  CHECK(std::abs(laplace_from_mellin(uni, Complex(1e-6), 0.5, line) - 1.0) <
        1e-5);

  // Two-sided exponential round trip at u = 0.3.  The bridge transforms are
  // memoized: the regularizer sweep revisits the same line nodes.
  BilateralLaplace phi{[](Complex u) { return 1.0 / (1.0 - u * u); },
                       {-1.0, 1.0}};
  BromwichLine bridge;
  bridge.half_height = 200.0;
  bridge.steps = 4000;
  bridge = bridge.with_log_tails(1e18, 1200);
  auto cache = std::make_shared<
      std::map<std::pair<double, double>, std::pair<Complex, Complex>>>();
  auto bridged = [bridge, phi, cache](Complex s) {
    const auto key = std::make_pair(s.real(), s.imag());
    auto it = cache->find(key);
    if (it == cache->end()) {
      it = cache->emplace(key, mellin_from_laplace(phi, s, -0.5, bridge)).first;
    }
    return it->second;
  };
  MellinPair m;
  m.plus = [bridged](Complex s) { return bridged(s).first; };
  m.minus = [bridged](Complex s) { return bridged(s).second; };
  m.has_minus = true;
  m.strip = {0.0, 1.0};
  // Gamma(1-s) weighting confines the outer integral to |Im s| <~ 26.
  BromwichLine outer;
  outer.half_height = 26.0;
  outer.steps = 2600;
  const Complex roundtrip = laplace_from_mellin(m, Complex(0.3), 0.5, outer);
  CHECK(std::abs(roundtrip - 1.0 / 0.91) < 1e-6);
}

TEST_CASE("fourier -> mellin bridge") {
  // Symmetric two-sided exponential e^{-|x|}: f*(y) = 2/(1+y^2).
  ComplexFunction fstar{[](Complex y) {
                          return 2.0 / (1.0 + y.real() * y.real());
                        },
                        "Lorentzian"};
  auto [plus, minus] = mellin_from_fourier(fstar, 0.5, 1e8, 4000);
  CHECK(std::abs(plus - minus) < 1e-10);
  CHECK(std::abs(plus - gamma(Complex(0.5))) < 1e-7);

  // Gaussian case: psi* = e^{-y^2} gives (1/2) Gamma(1/2) / Gamma(3/4).
  ComplexFunction gauss{[](Complex y) {
                          return std::exp(-y.real() * y.real());
                        },
                        "Gaussian"};
  const double expected =
      0.5 * oracle::kGammaHalf / std::tgamma(0.75);
  auto [gp, gm] = mellin_from_fourier(gauss, 0.5, 8.0, 4000);
  CHECK(std::abs(gp - expected) < 1e-8);
  CHECK(std::abs(gp - 0.72320454231603857) < 1e-8);

  ComplexFunction zero{[](Complex) { return Complex(0.0); }, "zero"};
  auto [zp, zm] = mellin_from_fourier(zero, 0.5, 10.0, 256);
  CHECK(std::abs(zp) == 0.0);
  CHECK(std::abs(zm) == 0.0);
  CHECK_THROWS_AS(mellin_from_fourier(zero, 1.5, 10.0, 256),
                  precondition_error);
}

TEST_CASE("mellin -> fourier bridge and round trip") {
  // M pair of e^{-|x|} is (Gamma, Gamma); f*(1) = 1.
  MellinPair m = gamma_pair();
  m.minus = m.plus;
  m.has_minus = true;
  m.strip = {0.0, 1.0};
  const auto line = short_line(60.0, 0.01);
  const Complex at1 = fourier_from_mellin(m, 1.0, 0.5, line);
  CHECK(std::abs(at1 - 1.0) < 1e-8);
  // Round trip against mellin_from_fourier.
  ComplexFunction fstar{[&](Complex y) {
                          return fourier_from_mellin(m, y.real(), 0.5, line);
                        },
                        "reconstructed Fourier transform"};
  auto [plus, minus] = mellin_from_fourier(fstar, 0.4, 1e8, 1600);
  CHECK(std::abs(plus - gamma(Complex(0.4))) < 1e-6);
  CHECK(std::abs(minus - plus) < 1e-6);
  // Conjugate symmetry for y < 0 and the zero transform.
  CHECK(std::abs(fourier_from_mellin(m, -1.0, 0.5, line) - std::conj(at1)) <
        1e-12);
  MellinPair zero;
  zero.strip = {0.0, 1.0};
  CHECK(std::abs(fourier_from_mellin(zero, 1.0, 0.5, line)) == 0.0);
}
