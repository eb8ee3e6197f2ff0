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

#include "mellin/complex_gamma.hpp"
#include "mellin/contour.hpp"
#include "mellin/errors.hpp"
#include "oracles.hpp"

using mellin::BromwichLine;
using mellin::Complex;
using mellin::ComplexFunction;

namespace {

BromwichLine gamma_line() {
  // |Gamma(gamma + it)| ~ e^{-pi |t|/2}: a short line suffices.
  BromwichLine l;
  l.abscissa = 1.0;
  l.half_height = 60.0;
  l.steps = 6000;
  l.tail_cutoff = l.half_height;
  return l;
}

}  // namespace

TEST_CASE("raw regularized line integral reproduces i/eps") {
  // With f = 1, eps = 1 on the imaginary axis the raw integral is i.
  BromwichLine l;
  l.abscissa = 0.0;
  l.half_height = 10.0;
  l.steps = 4000;
  l.tail_cutoff = l.half_height;
  l.regularizer_eps = 1.0;
  ComplexFunction one{[](Complex) { return Complex(1.0); }, "constant"};
  const Complex normalized = integrate_bromwich(one, l);
  const Complex raw = normalized * Complex(0.0, 2.0 * M_PI);
  CHECK(std::abs(raw - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("zero integrand integrates to zero") {
  ComplexFunction zero{[](Complex) { return Complex(0.0); }, "zero"};
  CHECK(std::abs(integrate_bromwich(zero, gamma_line())) == 0.0);
}

TEST_CASE("Mellin inversion of Gamma on the line gives e^{-x}") {
  for (double x : {1.0, 3.0}) {
    ComplexFunction f{[x](Complex s) {
                        return mellin::gamma(s) * std::exp(-s * std::log(x));
                      },
                      "Gamma(s) x^{-s}"};
    const Complex v = integrate_bromwich(f, gamma_line());
    CHECK(std::abs(v - std::exp(-x)) < 1e-10);
  }
}

TEST_CASE("mesh refinement is converged") {
  ComplexFunction f{[](Complex s) { return mellin::gamma(s); }, "Gamma"};
  BromwichLine l = gamma_line();
  const Complex coarse = integrate_bromwich(f, l);
  l.steps *= 2;
  const Complex fine = integrate_bromwich(f, l);
  CHECK(std::abs(coarse - fine) < 1e-8);
}

TEST_CASE("line integral is linear in the integrand") {
  ComplexFunction f{[](Complex s) { return mellin::gamma(s); }, "Gamma"};
  ComplexFunction g{[](Complex s) { return 1.0 / (s * s + 4.0); }, "rational"};
  ComplexFunction combo{[&](Complex s) {
                          return 2.0 * f(s) + Complex(0.0, 3.0) * g(s);
                        },
                        "combination"};
  const BromwichLine l = gamma_line();
  const Complex lhs = integrate_bromwich(combo, l);
  const Complex rhs = 2.0 * integrate_bromwich(f, l) +
                      Complex(0.0, 3.0) * integrate_bromwich(g, l);
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("tail warning fires for non-decaying integrands") {
  ComplexFunction one{[](Complex) { return Complex(1.0); }, "constant"};
  BromwichLine l;
  l.abscissa = 0.0;
  l.half_height = 50.0;
  l.steps = 1000;
  l.tail_cutoff = l.half_height;
  mellin::QuadStatus status;
  (void)integrate_bromwich(one, l, &status);
  CHECK(status.tail_warning);
}

TEST_CASE("principal branch of (-u)^{-s} is continuous along beta < 0 lines") {
  const double beta = -0.5;
  const Complex s(0.8, 0.0);
  double prev_arg = 0.0;
  bool first = true;
  for (double t = -300.0; t <= 300.0; t += 0.25) {
    const Complex u(beta, t);
    const Complex v = std::exp(-s * std::log(-u));
    const double a = std::arg(v);
    if (!first) CHECK(std::abs(a - prev_arg) < 0.5 * M_PI);
    prev_arg = a;
    first = false;
  }
}

TEST_CASE("regularizer extrapolation: eps-independent integrand") {
  ComplexFunction one{[](Complex) { return Complex(1.0); }, "constant"};
  BromwichLine l;
  l.abscissa = 0.0;
  l.half_height = 1.0;
  l.steps = 512;
  l.tail_cutoff = l.half_height;
  const auto r = extrapolate_regularizer(one, l, {0.004, 0.002, 0.001});
  // Limit is (1/2 pi) * 2T for the truncated unit integrand.
  CHECK(std::abs(r.value - 1.0 / M_PI) < 1e-9);
  CHECK(r.error_estimate < 1e-5);
}

TEST_CASE("regularizer extrapolation: Gamma inversion at x = 2") {
  ComplexFunction f{[](Complex s) {
                      return mellin::gamma(s) * std::exp(-s * std::log(2.0));
                    },
                    "Gamma(s) 2^{-s}"};
  BromwichLine l = gamma_line();
  const auto r = extrapolate_regularizer(f, l, {0.02, 0.01, 0.005});
  CHECK(std::abs(r.value - std::exp(-2.0)) < 5e-7);
  // A longer schedule extrapolates much deeper.
  const auto r6 =
      extrapolate_regularizer(f, l, {0.064, 0.048, 0.036, 0.027, 0.02, 0.015});
  CHECK(std::abs(r6.value - std::exp(-2.0)) < 1e-9);
  CHECK(r6.error_estimate < 1e-6);
}

TEST_CASE("regularizer extrapolation: Plancherel value for e^{-x}") {
  // (1/2 pi i) int |Gamma(1/2 + it)|^2 ds -> int_0^inf e^{-2x} dx = 1/2.
  ComplexFunction f{[](Complex s) {
                      const Complex g = mellin::gamma(s);
                      return g * std::conj(g);
                    },
                    "|Gamma|^2 on the half line"};
  BromwichLine l = gamma_line().with_abscissa(0.5);
  const auto r = extrapolate_regularizer(f, l, {0.02, 0.01, 0.005});
  CHECK(std::abs(r.value - 0.5) < 1e-9);
}

TEST_CASE("extrapolation rejects diverging sequences") {
  // e^{0.1 t^2} along the line overwhelms the regularizer once
  // pi eps^2 < 0.1, so the value sequence explodes.
  ComplexFunction f{[](Complex s) {
                      const double t = s.imag();
                      return Complex(std::exp(0.1 * t * t), 0.0);
                    },
                    "super-Gaussian growth"};
  BromwichLine l;
  l.abscissa = 0.0;
  l.half_height = 40.0;
  l.steps = 2000;
  l.tail_cutoff = l.half_height;
  CHECK_THROWS_AS(extrapolate_regularizer(f, l, {0.2, 0.15, 0.1}),
                  mellin::numerics_error);
}

TEST_CASE("half-line quadrature with endpoint singularity") {
  ComplexFunction one{[](Complex) { return Complex(1.0); }, "one"};
  CHECK(std::abs(integrate_halfline(one, Complex(0.5), 1.0, 3000) - 2.0) <
        1e-10);
  ComplexFunction decay{[](Complex y) { return std::exp(-y.real()); }, "e^-y"};
  CHECK(std::abs(integrate_halfline(decay, Complex(0.5), 45.0, 3000) -
                 oracle::kGammaHalf) < 1e-10);
  CHECK_THROWS_AS(integrate_halfline(one, Complex(1.2), 1.0, 100),
                  mellin::precondition_error);
}

TEST_CASE("damped oscillatory half-line integral: Lemma-5 constants") {
  for (double s = 0.1; s < 0.95; s += 0.2) {
    for (double sign : {1.0, -1.0}) {
      ComplexFunction osc{[sign](Complex y) {
                            return std::exp(Complex(0.0, sign * y.real()));
                          },
                          "e^{+-iy}"};
      const auto r = halfline_oscillatory(osc, Complex(1.0 - s),
                                          mellin::default_eta_sequence());
      const Complex expected =
          mellin::gamma(Complex(s)) *
          std::exp(Complex(0.0, sign * 0.5 * M_PI * s));
      CHECK(std::abs(r.value - expected) < 1e-6);
    }
  }
}

TEST_CASE("oscillatory half-line at s = 1/2 gives Gamma(1/2) e^{i pi/4}") {
  ComplexFunction osc{[](Complex y) {
                        return std::exp(Complex(0.0, y.real()));
                      },
                      "e^{iy}"};
  const auto r = halfline_oscillatory(osc, Complex(0.5),
                                      mellin::default_eta_sequence());
  const double c = 1.2533141373155003;  // Gamma(1/2)/sqrt(2)
  CHECK(std::abs(r.value - Complex(c, c)) < 1e-6);
}

TEST_CASE("line validation") {
  BromwichLine l;
  l.steps = 10;
  CHECK_THROWS_AS(l.validate(), mellin::precondition_error);
  ComplexFunction one{[](Complex) { return Complex(1.0); }, "one"};
  CHECK_THROWS_AS(extrapolate_regularizer(one, BromwichLine{}, {0.01, 0.02}),
                  mellin::precondition_error);
  CHECK_THROWS_AS(extrapolate_regularizer(one, BromwichLine{}, {0.01, 1e-5}),
                  mellin::precondition_error);
}
