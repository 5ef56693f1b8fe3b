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

#include <unsupported/Eigen/KroneckerProduct>

#include "doctest.h"
#include "hytel/error.hpp"
#include "hytel/fock/beam_splitter.hpp"
#include "hytel/fock/measurement.hpp"

using namespace hytel;

namespace {

// Reference: U|k,m> = (b0^+)^k (b1^+)^m |0,0> / sqrt(k! m!) with
// b0^+ = (a0^+ - a1^+)/sqrt2, b1^+ = (a0^+ + a1^+)/sqrt2 on a roomy space.
Eigen::VectorXd reference_column(int k, int m) {
  const int big = k + m + 1;
  Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(big, big);
  for (int n = 0; n + 1 < big; ++n) ad(n + 1, n) = std::sqrt(n + 1.0);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(big, big);
  const Eigen::MatrixXd a0 = Eigen::kroneckerProduct(ad, id);
  const Eigen::MatrixXd a1 = Eigen::kroneckerProduct(id, ad);
  const Eigen::MatrixXd b0 = (a0 - a1) / std::sqrt(2.0);
  const Eigen::MatrixXd b1 = (a0 + a1) / std::sqrt(2.0);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(big * big);
  v(0) = 1.0;
  double fact = 1.0;
  for (int i = 0; i < k; ++i) {
    v = b0 * v;
    fact *= i + 1.0;
  }
  for (int i = 0; i < m; ++i) {
    v = b1 * v;
    fact *= i + 1.0;
  }
  v /= std::sqrt(fact);
  Eigen::VectorXd out(k + m + 1);
  for (int j = 0; j <= k + m; ++j) out(j) = v(j * big + (k + m - j));
  return out;
}

}  // namespace

TEST_CASE("table matches the creation-operator construction") {
  const auto table = beam_splitter_table(6);
  for (int k = 0; k < 6; ++k) {
    for (int m = 0; m < 6; ++m) {
      const auto& col = table->column(k, m);
      const auto ref = reference_column(k, m);
      REQUIRE(col.size() == static_cast<std::size_t>(ref.size()));
      for (int j = 0; j <= k + m; ++j) CHECK(col[j] == doctest::Approx(ref(j)).epsilon(1e-13));
    }
  }
}

TEST_CASE("coherent states stay coherent") {
  const double a = 1.0;
  const double b = 1.0;
  const int n = cutoff_for(std::sqrt(2.0) * std::max(a, b));
  const auto out = beam_splitter(tensor(coherent_state(a, n), coherent_state(b, n)), ModeIndex(0),
                                 ModeIndex(1));
  const auto expect = tensor(coherent_state((a + b) / std::sqrt(2.0), n),
                             coherent_state((b - a) / std::sqrt(2.0), n));
  CHECK(std::norm(expect.amps().dot(out.amps())) >= 1.0 - 1e-10);

  SUBCASE("unequal amplitudes map to ((x+y), (y-x))/sqrt2") {
    const double x = 0.9;
    const double y = -0.3;
    const int m = cutoff_for(1.0);
    const auto o = beam_splitter(tensor(coherent_state(x, m), coherent_state(y, m)),
                                 ModeIndex(0), ModeIndex(1));
    const auto e = tensor(coherent_state((x + y) / std::sqrt(2.0), m),
                          coherent_state((y - x) / std::sqrt(2.0), m));
    CHECK(std::norm(e.amps().dot(o.amps())) >= 1.0 - 1e-10);
  }
}

TEST_CASE("single-photon Bell states") {
  FockSpace s({3, 3});
  const std::vector<int> o01{0, 1};
  const std::vector<int> o10{1, 0};
  const auto e01 = FockState::basis(s, o01);
  const auto e10 = FockState::basis(s, o10);
  const FockState plus(s, (e01.amps() + e10.amps()) / std::sqrt(2.0));
  const FockState minus(s, (e01.amps() - e10.amps()) / std::sqrt(2.0));
  const auto p = beam_splitter(plus, ModeIndex(0), ModeIndex(1));
  const auto m = beam_splitter(minus, ModeIndex(0), ModeIndex(1));
  CHECK(std::norm(e10.amps().dot(p.amps())) == doctest::Approx(1.0));
  CHECK(std::norm(e01.amps().dot(m.amps())) == doctest::Approx(1.0));
}

TEST_CASE("vacuum is fixed") {
  FockSpace s({4, 4});
  const std::vector<int> vac{0, 0};
  const auto v = FockState::basis(s, vac);
  const auto out = beam_splitter(v, ModeIndex(0), ModeIndex(1));
  CHECK((out.amps() - v.amps()).norm() < 1e-15);
}

TEST_CASE("repeated application") {
  const int n = 8;
  FockSpace s({n, n});
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n * n);
  const std::vector<int> o12{1, 2};
  const std::vector<int> o21{2, 1};
  const std::vector<int> o00{0, 0};
  amps(s.flat_index(o12)) = cplx(0.6, 0.0);
  amps(s.flat_index(o21)) = cplx(0.0, 0.64);
  amps(s.flat_index(o00)) = 0.48;
  const FockState psi(s, amps);

  auto twice = beam_splitter(beam_splitter(psi, ModeIndex(0), ModeIndex(1)), ModeIndex(0),
                             ModeIndex(1));
  // a0^+ -> -a1^+, a1^+ -> a0^+: |k, m> -> (-1)^k |m, k>.
  Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(n * n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      const std::vector<int> from{k, m};
      const std::vector<int> to{m, k};
      expect(s.flat_index(to)) += (k % 2 ? -1.0 : 1.0) * amps(s.flat_index(from));
    }
  }
  CHECK((twice.amps() - expect).norm() < 1e-14);

  auto four = beam_splitter(beam_splitter(twice, ModeIndex(0), ModeIndex(1)), ModeIndex(0),
                            ModeIndex(1));
  // Four passes give a0^+ -> -a0^+, a1^+ -> -a1^+, i.e. (-1)^N.
  Eigen::VectorXcd parity = amps;
  for (std::size_t f = 0; f < s.size(); ++f) {
    const int total = s.occupation(f, ModeIndex(0)) + s.occupation(f, ModeIndex(1));
    if (total % 2) parity(static_cast<Eigen::Index>(f)) *= -1.0;
  }
  CHECK((four.amps() - parity).norm() < 1e-14);

  SUBCASE("four passes on coherent states flip both amplitudes") {
    const int m = cutoff_for(1.0);
    FockState c = tensor(coherent_state(0.7, m), coherent_state(0.2, m));
    for (int i = 0; i < 4; ++i) c = beam_splitter(c, ModeIndex(0), ModeIndex(1));
    const auto e = tensor(coherent_state(-0.7, m), coherent_state(-0.2, m));
    CHECK(std::norm(e.amps().dot(c.amps())) >= 1.0 - 1e-10);
  }
}

TEST_CASE("density matrix and ensemble agree with the pure path") {
  const int n = cutoff_for(0.8);
  const auto psi = tensor(coherent_state(0.8, n), coherent_state(-0.2, n));
  const auto out = beam_splitter(psi, ModeIndex(0), ModeIndex(1));
  const auto rho = beam_splitter(DensityMatrix::pure(psi), ModeIndex(0), ModeIndex(1));
  CHECK(trace_distance(rho, DensityMatrix::pure(out)) < 1e-13);

  Ensemble e(psi.space());
  e.add(psi.amps());
  const auto eo = beam_splitter(e, ModeIndex(0), ModeIndex(1));
  CHECK(trace_distance(eo.to_density(), rho) < 1e-13);
}

TEST_CASE("beam splitter errors") {
  FockSpace s({3, 4});
  const std::vector<int> occ{2, 0};
  const auto v = FockState::basis(s, occ);
  try {
    beam_splitter(v, ModeIndex(0), ModeIndex(1));
    FAIL("expected CutoffMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutoffMismatch);
  }

  FockSpace t({3, 3});
  const std::vector<int> full{2, 2};
  try {
    beam_splitter(FockState::basis(t, full), ModeIndex(0), ModeIndex(1));
    FAIL("expected TruncationLeakage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationLeakage);
  }
}
