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
#include <vector>

#include "doctest.h"
#include "hytel/bell/bell_measurement.hpp"
#include "hytel/error.hpp"
#include "hytel/fock/measurement.hpp"
#include "hytel/loss/loss_channel.hpp"

using namespace hytel;

namespace {

double prob_of(const std::vector<BsmOutcome>& v, BellOutcome k) {
  for (const auto& o : v) {
    if (o.kind == k) return o.probability;
  }
  return 0.0;
}

// Two-mode coherent Bell state as a truncated Fock vector.
FockState coherent_bell_fock(const CoherentBellState& b, double beta, int n) {
  const FockState e[2] = {coherent_state(beta, n), coherent_state(-beta, n)};
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n * n);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) v += b.coefficients(k, l) * tensor(e[k], e[l]).amps();
  }
  return FockState(FockSpace({n, n}), v);
}

FockState qubit_rail(const QubitCoeffs& q, int dim) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(0) = q.a();
  v(1) = q.b();
  return FockState(FockSpace({dim}), v);
}

}  // namespace

TEST_CASE("labels and corrections") {
  CHECK(to_string(BellOutcome::B3) == "B3");
  CHECK(to_string(BellOutcome::Fail) == "FAIL");
  CHECK(correction_for(BellOutcome::B1) == Correction{false, false});
  CHECK(correction_for(BellOutcome::B2) == Correction{false, true});
  CHECK(correction_for(BellOutcome::B3) == Correction{true, false});
  CHECK(correction_for(BellOutcome::B4) == Correction{true, true});
}

TEST_CASE("coherent Bell states") {
  const auto bs = coherent_bell_states(1.0, 1.0);
  CHECK(bs[1].normalization == doctest::Approx(std::pow(2.0 - 2.0 * std::exp(-4.0), -0.5)));
  CHECK(bs[1].normalization == doctest::Approx(0.713672).epsilon(1e-6));
  CHECK(coherent_bell_states(6.0, 1.0)[0].normalization == doctest::Approx(1.0 / std::sqrt(2.0)));

  const double beta = 0.7;
  const int n = cutoff_for(beta);
  const auto st = coherent_bell_states(beta, 1.0);
  for (int i = 0; i < 4; ++i) {
    const auto vi = coherent_bell_fock(st[i], beta, n);
    CHECK(vi.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = i + 1; j < 4; ++j) {
      const cplx ov = vi.amps().dot(coherent_bell_fock(st[j], beta, n).amps());
      if (i == 0 && j == 2) {
        // Only B1 and B3 share support: 4 g N+^2 with g = e^{-2 b^2}.
        const double np = st[0].normalization;
        CHECK(ov.real() == doctest::Approx(4.0 * std::exp(-2.0 * beta * beta) * np * np).epsilon(1e-12));
      } else {
        CHECK(std::abs(ov) < 1e-14);
      }
    }
  }
  CHECK_THROWS_AS(coherent_bell_states(1.0, 0.0), Error);
}

TEST_CASE("single-rail measurement") {
  SUBCASE("B3 is identified") {
    const auto b3 = DensityMatrix::pure(single_rail_bell_state(BellOutcome::B3, 3));
    const auto out = bsm_single_rail(b3, ModeIndex(0), ModeIndex(1));
    CHECK(prob_of(out, BellOutcome::B3) == doctest::Approx(1.0));
    CHECK(prob_of(out, BellOutcome::B4) == doctest::Approx(0.0));
  }
  SUBCASE("B3 with a spectator mode") {
    const auto joint = tensor(DensityMatrix::pure(single_rail_bell_state(BellOutcome::B3, 3)),
                              DensityMatrix::pure(coherent_state(0.5, 17)));
    const auto out = bsm_single_rail(joint, ModeIndex(0), ModeIndex(1));
    CHECK(prob_of(out, BellOutcome::B3) == doctest::Approx(1.0));
    REQUIRE(out[0].conditional);
    CHECK(fidelity(coherent_state(0.5, 17), *out[0].conditional) == doctest::Approx(1.0));
  }
  SUBCASE("B1 and B2 fail") {
    for (auto k : {BellOutcome::B1, BellOutcome::B2}) {
      const auto rho = DensityMatrix::pure(single_rail_bell_state(k, 3));
      CHECK(prob_of(bsm_single_rail(rho, ModeIndex(0), ModeIndex(1)), BellOutcome::Fail) ==
            doctest::Approx(1.0));
    }
  }
  SUBCASE("fully decohered channel") {
    const auto q = QubitCoeffs::from_bloch(1.9, 0.3);
    FockSpace one({3});
    const auto joint =
        tensor(DensityMatrix::pure(qubit_rail(q, 3)),
               DensityMatrix::pure(FockState::basis(one, std::vector<int>{0})));
    const auto out = bsm_single_rail(joint, ModeIndex(0), ModeIndex(1));
    CHECK(prob_of(out, BellOutcome::B3) == doctest::Approx(q.pb() / 2.0));
    CHECK(prob_of(out, BellOutcome::B4) == doctest::Approx(q.pb() / 2.0));
    CHECK(prob_of(out, BellOutcome::Fail) == doctest::Approx(q.pa()));
  }
  SUBCASE("errors") {
    FockSpace two({2, 2});
    const auto small = DensityMatrix::pure(FockState::basis(two, std::vector<int>{0, 1}));
    CHECK_THROWS_AS(bsm_single_rail(small, ModeIndex(0), ModeIndex(1)), Error);
    FockSpace three({3, 3});
    const auto two_photons = DensityMatrix::pure(FockState::basis(three, std::vector<int>{2, 0}));
    try {
      bsm_single_rail(two_photons, ModeIndex(0), ModeIndex(1));
      FAIL("expected ModeNotSingleRail");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ModeNotSingleRail);
    }
  }
}

TEST_CASE("single-rail projections agree with the analytic contraction") {
  const double alpha = 1.1;
  const auto p = LossParams::from_r(0.45);
  const auto ch = decohere_hybrid(alpha, p);
  const int n = cutoff_for(alpha);
  const auto q = QubitCoeffs::from_bloch(0.8, 2.1);
  // Modes: input rail, channel rail, coherent mode.
  const auto channel_fock = materialize(ch.as_operator(), single_rail_embedding(3), n);
  const auto joint = tensor(DensityMatrix::pure(qubit_rail(q, 3)), channel_fock);
  const auto analytic = bsm_discrete_analytic(q, ch.as_operator(), 0);
  double total = 0.0;
  for (const auto& a : analytic) total += a.probability;
  CHECK(total == doctest::Approx(1.0));
  for (int i = 0; i < 4; ++i) {
    const auto num = project_single_rail_bell(joint, ModeIndex(0), ModeIndex(1), analytic[i].kind);
    CAPTURE(i);
    CHECK(num.probability == doctest::Approx(analytic[i].probability).epsilon(1e-12));
    REQUIRE(num.conditional);
    REQUIRE(analytic[i].conditional);
    CHECK(trace_distance(*num.conditional, materialize(*analytic[i].conditional, n)) < 1e-11);
  }
  CHECK_THROWS_AS(bsm_discrete_analytic(q, ch.as_operator(), 1), Error);
}

TEST_CASE("coherent measurement of a coherent Bell state") {
  const double beta = 0.9;
  const int n = cutoff_for(std::sqrt(2.0) * beta);
  const auto st = coherent_bell_states(beta, 1.0);
  const auto rho = DensityMatrix::pure(coherent_bell_fock(st[0], beta, n));
  const auto out = bsm_coherent(rho, ModeIndex(0), ModeIndex(1));
  // After the beam splitter: N+ (|sqrt2 b> + |-sqrt2 b>)|0>.
  const double vac = 2.0 * st[0].normalization * std::abs(coherent_state(std::sqrt(2.0) * beta, n).amps()(0));
  CHECK(prob_of(out, BellOutcome::B1) == doctest::Approx(1.0 - vac * vac).epsilon(1e-12));
  CHECK(prob_of(out, BellOutcome::Fail) == doctest::Approx(vac * vac).epsilon(1e-12));
  CHECK(prob_of(out, BellOutcome::B2) < 1e-14);

  const auto odd = DensityMatrix::pure(coherent_bell_fock(st[3], beta, n));
  CHECK(prob_of(bsm_coherent(odd, ModeIndex(0), ModeIndex(1)), BellOutcome::B4) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherent measurement agrees with the analytic contraction") {
  const double alpha = 1.2;
  const auto p = LossParams::from_r(0.3);
  const auto ch = decohere_hybrid(alpha, p);
  const double beta = ch.beta();
  const int n = cutoff_for(std::sqrt(2.0) * beta);
  const auto q = QubitCoeffs::from_bloch(2.2, -0.9);
  const double norm = target_normalization(q, beta);
  const FockState in(FockSpace({n}), norm * (q.a() * coherent_state(beta, n).amps() +
                                             q.b() * coherent_state(-beta, n).amps()));
  // Modes: input coherent, rail, channel coherent.
  const auto joint = tensor(DensityMatrix::pure(in), materialize(ch, n));
  const auto num = bsm_coherent(joint, ModeIndex(0), ModeIndex(2));
  const auto ana = bsm_coherent_analytic(q, ch.as_operator());
  REQUIRE(num.size() == ana.size());
  double total = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    CAPTURE(i);
    CHECK(num[i].kind == ana[i].kind);
    CHECK(num[i].probability == doctest::Approx(ana[i].probability).epsilon(1e-11));
    total += ana[i].probability;
    REQUIRE(num[i].conditional);
    REQUIRE(ana[i].conditional);
    CHECK((num[i].conditional->mat() - *ana[i].conditional).norm() < 1e-10);
  }
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("coherent failure probability") {
  // Basis input |b> against the channel: both detectors dark with e^{-2 b^2}.
  for (double t : {1.0, 0.7}) {
    const double alpha = 1.0;
    const auto ch = decohere_hybrid(alpha, LossParams::from_t(t));
    const double beta = ch.beta();
    const int n = cutoff_for(std::sqrt(2.0) * beta);
    const auto joint = tensor(DensityMatrix::pure(coherent_state(beta, n)), materialize(ch, n));
    const auto out = bsm_coherent(Ensemble::from_density(joint), ModeIndex(0), ModeIndex(2));
    CHECK(prob_of(out, BellOutcome::Fail) ==
          doctest::Approx(std::exp(-2.0 * beta * beta)).epsilon(1e-10));
  }
  CHECK(std::exp(-2.0) == doctest::Approx(0.13534).epsilon(1e-4));
}

TEST_CASE("coherent measurement errors") {
  FockSpace s({4, 4});
  const auto both = DensityMatrix::pure(FockState::basis(s, std::vector<int>{2, 0}));
  try {
    bsm_coherent(both, ModeIndex(0), ModeIndex(1));
    FAIL("expected BasisMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
  const int big = numeric_dim_limit() + 1;
  CHECK(numeric_dim_limit() == 64);
  Ensemble e(FockSpace({big, big}));
  try {
    bsm_coherent(e, ModeIndex(0), ModeIndex(1));
    FAIL("expected BackendOverflow");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::BackendOverflow);
  }
}
