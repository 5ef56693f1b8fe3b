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
#include <vector>

#include "doctest.h"
#include "hytel/error.hpp"
#include "hytel/teleport/closed_form.hpp"
#include "hytel/teleport/numeric.hpp"
#include "hytel/teleport/teleportation.hpp"

using namespace hytel;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<std::pair<double, double>> kInputs{
    {0.0, 0.0}, {kPi, 0.0}, {kPi / 2.0, 0.0}, {kPi / 2.0, kPi / 2.0}, {1.1, 0.7}, {2.5, -2.0}};

}  // namespace

TEST_CASE("lossless teleportation is perfect") {
  for (auto d : {Direction::S2C, Direction::C2S}) {
    for (auto [th, ph] : kInputs) {
      const auto q = QubitCoeffs::from_bloch(th, ph);
      CHECK(teleport(d, q, 1.3, 0.0).fidelity == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(fidelity_closed_form(d, q, 1.3, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  const auto q = QubitCoeffs::from_bloch(0.0, 0.0);
  CHECK(teleport_numeric(Direction::S2C, q, 0.7, 0.0).fidelity == doctest::Approx(1.0).epsilon(1e-12));
  const auto south = QubitCoeffs::from_bloch(kPi, 0.0);
  CHECK(teleport_c2s(south, 1.0, 0.0).fidelity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("c->s limits") {
  const auto q = QubitCoeffs::from_bloch(1.1, 0.3);
  CHECK(fidelity_closed_form(Direction::C2S, q, 1.0, 1.0) == doctest::Approx(q.pa()));
  // Deviation is O(t), t ~ 4.5e-5 here.
  CHECK(std::abs(teleport_c2s(q, 1.0, 1.0 - 1e-9).fidelity - q.pa()) < 1e-4);
}

TEST_CASE("frozen numeric fixtures") {
  SUBCASE("c->s, equator, alpha 1, r 0.6") {
    const auto q = QubitCoeffs::from_bloch(kPi / 2.0, 0.0);
    const double frozen = 0.6947009023839887;
    CHECK(teleport_numeric(Direction::C2S, q, 1.0, 0.6).fidelity == doctest::Approx(frozen).epsilon(1e-12));
    CHECK(std::abs(teleport_c2s(q, 1.0, 0.6).fidelity - frozen) <= 1e-8);
    CHECK(std::abs(fidelity_closed_form(Direction::C2S, q, 1.0, 0.6) - frozen) <= 1e-8);
  }
  SUBCASE("s->c, equator, alpha 1, r 0.5") {
    const auto q = QubitCoeffs::from_bloch(kPi / 2.0, 0.0);
    const double frozen = 0.8349438679471035;
    CHECK(teleport_numeric(Direction::S2C, q, 1.0, 0.5).fidelity == doctest::Approx(frozen).epsilon(1e-12));
    CHECK(std::abs(teleport_s2c(q, 1.0, 0.5).fidelity - frozen) <= 1e-8);
    CHECK(std::abs(fidelity_closed_form(Direction::S2C, q, 1.0, 0.5) - frozen) <= 1e-8);
  }
}

TEST_CASE("analytic and numeric pipelines agree") {
  for (auto d : kAllDirections) {
    for (double alpha : {0.5, 1.5}) {
      for (double r : {0.2, 0.75}) {
        for (auto [th, ph] : kInputs) {
          CAPTURE(to_string(d));
          CAPTURE(alpha);
          CAPTURE(r);
          CAPTURE(th);
          CAPTURE(ph);
          const auto q = QubitCoeffs::from_bloch(th, ph);
          const auto a = teleport(d, q, alpha, r);
          const auto n = teleport_numeric(d, q, alpha, r);
          CHECK(std::abs(a.fidelity - n.fidelity) <= 1e-8);
          CHECK(std::abs(a.input_success_probability - n.input_success_probability) <= 1e-8);
          CHECK(std::abs(a.fidelity - fidelity_closed_form(d, q, alpha, r, Variant::Corrected)) <= 1e-10);
          double total = 0.0;
          for (const auto& o : n.breakdown) total += o.probability;
          CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
          CHECK(n.backend == Backend::Numeric);
        }
      }
    }
  }
}

TEST_CASE("process tabulation matches direct runs") {
  const auto q = QubitCoeffs::from_bloch(1.7, 2.4);
  for (auto d : kAllDirections) {
    const NumericProcess p(d, 0.8, 0.4);
    CHECK(std::abs(p.fidelity(q) - teleport_numeric(d, q, 0.8, 0.4).fidelity) <= 1e-12);
  }
}

TEST_CASE("polarization closed forms") {
  for (auto [th, ph] : kInputs) {
    const auto q = QubitCoeffs::from_bloch(th, ph);
    CHECK(fidelity_closed_form(Direction::C2P, q, 1.0, 0.0, Variant::Corrected) ==
          doctest::Approx(1.0));
    CHECK(fidelity_closed_form(Direction::C2P, q, 1.0, 0.0, Variant::Printed) ==
          doctest::Approx(1.0 - q.pa() * q.pb()));
  }
  const auto h = QubitCoeffs::from_amplitudes(1.0, 0.0);
  for (double alpha : {0.3, 2.0, 7.0}) {
    CHECK(fidelity_closed_form(Direction::P2C, h, alpha, 0.0) == doctest::Approx(1.0));
    CHECK(teleport_p2c(h, alpha, 1e-12).fidelity == doctest::Approx(1.0));
  }
}

TEST_CASE("dual-rail oracle") {
  const auto h = QubitCoeffs::from_amplitudes(1.0, 0.0);
  for (double r : {0.0, 0.5, 0.8}) {
    const double t2 = 1.0 - r * r;
    CHECK(dual_rail_oracle_c2p(h, 1.0, r) == doctest::Approx(t2).epsilon(1e-10));
  }
  const auto bal = QubitCoeffs::from_bloch(kPi / 2.0, 0.0);
  const double oracle = dual_rail_oracle_c2p(bal, 1.0, 0.5);
  const double corrected = fidelity_closed_form(Direction::C2P, bal, 1.0, 0.5, Variant::Corrected);
  const double printed = fidelity_closed_form(Direction::C2P, bal, 1.0, 0.5, Variant::Printed);
  CHECK(std::abs(oracle - corrected) <= 1e-10);
  CHECK(std::abs(oracle - printed) > 1e-3);

  const auto q = QubitCoeffs::from_bloch(1.1, 0.7);
  const double p2c = dual_rail_oracle_p2c(q, 1.0, 0.5);
  CHECK(std::abs(p2c - fidelity_closed_form(Direction::P2C, q, 1.0, 0.5, Variant::Corrected)) <= 1e-10);
  CHECK(std::abs(p2c - fidelity_closed_form(Direction::P2C, q, 1.0, 0.5, Variant::Printed)) > 1e-6);
}

TEST_CASE("success probabilities") {
  CHECK(success_prob(Direction::C2S, 1.0, 0.0) == doctest::Approx((1.0 - std::exp(-2.0)) / 2.0));
  CHECK(success_prob(Direction::C2S, 1.0, 0.0) == doctest::Approx(0.43233).epsilon(1e-5));
  CHECK(success_prob(Direction::C2S, 1.0, 1.0) == 0.0);
  for (double a : {0.2, 1.0, 10.0}) {
    for (double r : {0.0, 0.5, 0.999}) {
      CHECK(success_prob(Direction::S2C, a, r) == 0.5);
      CHECK(success_prob(Direction::P2C, a, r) == doctest::Approx((1.0 - r * r) / 2.0));
    }
  }
  CHECK(success_prob(Direction::C2P, 5.0, 0.0) > 0.999);
  CHECK(success_prob(Direction::C2P, 50.0, 0.0) == doctest::Approx(1.0));
  const auto lim = success_prob_detail(Direction::C2P, 0.0, 0.3);
  CHECK(lim.limit);
  CHECK(lim.value == 0.0);
  // Direct evaluation of the logarithmic form where it is well conditioned.
  const double x = 2.0 * 0.64;
  const double direct = 0.5 * std::expm1(x) * std::log((1.0 + std::exp(-x)) / (1.0 - std::exp(-x)));
  CHECK(success_prob(Direction::C2P, 1.0, 0.6) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(success_prob(Direction::C2P, 1e-5, 0.0) >= 0.0);
  CHECK(success_prob(Direction::C2P, 1e-5, 0.0) < 1e-8);
}

TEST_CASE("numeric outcome accounting") {
  for (double r : {0.0, 0.5, 0.99}) {
    for (double alpha : {0.5, 2.0}) {
      const NumericProcess s2c(Direction::S2C, alpha, r);
      CHECK(s2c.mixed_input_success() == doctest::Approx(0.5).epsilon(1e-9));
      const NumericProcess c2s(Direction::C2S, alpha, r);
      const double t2 = 1.0 - r * r;
      CHECK(std::abs(c2s.mixed_input_success() - success_prob(Direction::C2S, alpha, r)) <= 1e-9);
      CHECK(std::abs(c2s.mixed_input_fail() - std::exp(-2.0 * t2 * alpha * alpha)) <= 1e-8);
    }
  }
  const NumericProcess p2c(Direction::P2C, 1.0, 0.5);
  CHECK(p2c.mixed_input_success() == doctest::Approx(0.375).epsilon(1e-9));
  const NumericProcess c2s(Direction::C2S, 1.0, 0.0);
  CHECK(c2s.mixed_input_fail() == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("closed-form averages") {
  CHECK(average_fidelity_closed(Direction::C2S, 1.0, 0.0, Variant::Printed) ==
        doctest::Approx(7.0 / 6.0));
  CHECK(average_fidelity_closed(Direction::C2S, 1.0, 0.0, Variant::Corrected) == doctest::Approx(1.0));
  CHECK(average_fidelity_closed(Direction::C2S, 1.0, 1.0, Variant::Corrected) == doctest::Approx(0.5));
  CHECK(average_fidelity_closed(Direction::C2P, 2.0, 0.0) == doctest::Approx(1.0));
  const double t = 0.9;
  const double r = std::sqrt(1.0 - t * t);
  CHECK(average_fidelity_closed(Direction::C2P, 1.0, r) == doctest::Approx(0.7246).epsilon(1e-4));
  try {
    average_fidelity_closed(Direction::S2C, 1.0, 0.5);
    FAIL("expected UnsupportedDirection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDirection);
  }
  CHECK(kClassicalLimit == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("argument errors") {
  const auto q = QubitCoeffs::from_bloch(1.0, 0.0);
  CHECK_THROWS_AS(teleport_s2c(q, 1.0, 1.0), Error);
  CHECK_THROWS_AS(teleport_c2s(q, 0.0, 0.2), Error);
  CHECK_THROWS_AS(fidelity_closed_form(Direction::S2C, q, -1.0, 0.2), Error);
  try {
    teleport_numeric(Direction::C2S, q, 3.5, 0.2);
    FAIL("expected BackendOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BackendOverflow);
  }
  CHECK(parse_direction("C2P") == Direction::C2P);
  CHECK_FALSE(parse_direction("x2y"));
}
