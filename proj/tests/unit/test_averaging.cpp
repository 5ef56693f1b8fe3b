// Copyright 2026 The hytel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hytel/averaging/averaging.hpp"
#include "hytel/error.hpp"
#include "hytel/teleport/closed_form.hpp"

using namespace hytel;

TEST_CASE("Gauss-Legendre rule") {
  const auto& two = gauss_legendre(2);
  CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(two.weights[0] == doctest::Approx(1.0));

  for (int n : {1, 5, 16, 64, 257}) {
    const auto& gl = gauss_legendre(n);
    double w = 0.0;
    for (double x : gl.weights) w += x;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // Exact through degree 2n - 1.
    const int deg = 2 * n - 2;
    double m = 0.0;
    for (int i = 0; i < n; ++i) m += gl.weights[i] * std::pow(gl.nodes[i], deg);
    CHECK(m == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-12));
  }
  CHECK(&gauss_legendre(16) == &gauss_legendre(16));
}

TEST_CASE("Bloch moments") {
  const auto pa2 = [](const QubitCoeffs& q) { return q.pa() * q.pa(); };
  const auto papb = [](const QubitCoeffs& q) { return q.pa() * q.pb(); };
  const auto pa = [](const QubitCoeffs& q) { return q.pa(); };
  CHECK(bloch_average_fixed(pa2, 16, 16) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(bloch_average_fixed(papb, 16, 16) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(bloch_average_fixed(pa, 16, 16) == doctest::Approx(0.5).epsilon(1e-14));
  const auto re2 = [](const QubitCoeffs& q) {
    const double x = q.coherence().real();
    return x * x;
  };
  CHECK(bloch_average_fixed(re2, 16, 16) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("refinement") {
  const auto smooth = [](const QubitCoeffs& q) { return q.pa() * q.pa(); };
  const auto res = bloch_average(smooth, QuadratureSpec{8, 8, 1e-12, 64});
  CHECK(res.converged);
  CHECK(res.n_theta == 16);
  CHECK(res.value == doctest::Approx(1.0 / 3.0));

  const auto kink = [](const QubitCoeffs& q) { return std::abs(q.pa() - 0.5); };
  const auto bad = bloch_average(kink, QuadratureSpec{8, 8, 1e-15, 32});
  CHECK_FALSE(bad.converged);
  CHECK(bad.delta > 1e-15);

  CHECK_THROWS_AS(bloch_average(smooth, QuadratureSpec{4, 8, 1e-9, 64}), Error);
  CHECK_THROWS_AS(bloch_average(smooth, QuadratureSpec{8, 8, 0.0, 64}), Error);
}

TEST_CASE("fidelity averages against closed forms") {
  for (double alpha : {0.5, 1.0, 2.0, 10.0}) {
    for (double r : {0.0, 0.3, 0.8, 0.999}) {
      CAPTURE(alpha);
      CAPTURE(r);
      const double c2s = average_fidelity(Direction::C2S, alpha, r);
      CHECK(std::abs(c2s - average_fidelity_closed(Direction::C2S, alpha, r, Variant::Corrected)) <= 1e-9);
      const double c2p = average_fidelity(Direction::C2P, alpha, r);
      CHECK(std::abs(c2p - average_fidelity_closed(Direction::C2P, alpha, r)) <= 1e-9);
    }
    CHECK(average_fidelity(Direction::S2C, alpha, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const double r = std::sqrt(1.0 - 0.81);
  CHECK(average_fidelity(Direction::C2P, 1.0, r) == doctest::Approx(0.7246).epsilon(1e-4));
  // The printed cross term does not integrate to the printed average.
  const double printed = average_fidelity(Direction::C2P, 1.0, r, {}, Variant::Printed);
  CHECK(std::abs(printed - average_fidelity_closed(Direction::C2P, 1.0, r)) > 1e-3);
}

TEST_CASE("c->s endpoints") {
  CHECK(average_fidelity(Direction::C2S, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(average_fidelity(Direction::C2S, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("numeric average follows the closed form") {
  const QuadratureSpec spec{16, 16, 1e-9, 64};
  const auto num = average_fidelity_numeric(Direction::C2S, 0.5, 0.3, spec);
  CHECK(num.converged);
  CHECK(std::abs(num.value - average_fidelity_closed(Direction::C2S, 0.5, 0.3, Variant::Corrected)) <= 1e-8);
  const auto succ = average_success_numeric(Direction::S2C, 1.0, 0.4, spec);
  CHECK(succ.value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("non-convergence is reported") {
  try {
    average_fidelity(Direction::S2C, 1.0, 0.5, QuadratureSpec{8, 8, 1e-300, 16});
    FAIL("expected NonConvergent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonConvergent);
  }
  const auto res = average_fidelity_certified(Direction::S2C, 1.0, 0.5, QuadratureSpec{8, 8, 1e-300, 16});
  CHECK_FALSE(res.converged);
}
