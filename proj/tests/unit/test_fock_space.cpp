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
#include "hytel/error.hpp"
#include "hytel/fock/fock_space.hpp"
#include "hytel/fock/measurement.hpp"

using namespace hytel;

TEST_CASE("cutoff_for") {
  CHECK(cutoff_for(0.0) == 12);
  CHECK(cutoff_for(1.0) == 21);
  CHECK(cutoff_for(2.0) == 32);
  CHECK(cutoff_for(3.0 * std::sqrt(2.0)) == 64);
}

TEST_CASE("flat index is row major") {
  FockSpace s({2, 3, 4});
  CHECK(s.size() == 24);
  CHECK(s.stride(ModeIndex(0)) == 12);
  CHECK(s.stride(ModeIndex(2)) == 1);
  const std::vector<int> occ{1, 2, 3};
  const auto i = s.flat_index(occ);
  CHECK(i == 12 + 8 + 3);
  CHECK(s.occupation(i, ModeIndex(0)) == 1);
  CHECK(s.occupation(i, ModeIndex(1)) == 2);
  CHECK(s.occupation(i, ModeIndex(2)) == 3);

  const std::vector<ModeIndex> keep{ModeIndex(2), ModeIndex(0)};
  CHECK(s.sub_space(keep).dims() == std::vector<int>{4, 2});
}

TEST_CASE("bad modes and occupations") {
  FockSpace s({2, 2});
  const std::vector<int> too_big{2, 0};
  const std::vector<int> short_tuple{1};
  try {
    s.check_mode(ModeIndex(2));
    FAIL("expected ModeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModeOutOfRange);
  }
  CHECK_THROWS_AS(s.flat_index(too_big), Error);
  CHECK_THROWS_AS(s.flat_index(short_tuple), Error);
  CHECK_THROWS_AS(FockState(s, Eigen::VectorXcd::Zero(3)), Error);
}

TEST_CASE("coherent_state") {
  SUBCASE("alpha = 0 is the vacuum") {
    const auto v = coherent_state(0.0, 12);
    CHECK(std::abs(v.amps()(0) - cplx(1.0)) < 1e-15);
    CHECK(v.amps().tail(11).norm() == doctest::Approx(0.0));
  }
  SUBCASE("overlap with the mirrored state") {
    const int n = cutoff_for(1.0);
    const auto p = coherent_state(1.0, n);
    const auto m = coherent_state(-1.0, n);
    CHECK(p.amps().dot(m.amps()).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(std::exp(-2.0) == doctest::Approx(0.135335).epsilon(1e-5));
  }
  SUBCASE("normalized at the working cutoff") {
    const auto v = coherent_state(2.0, cutoff_for(2.0 * std::sqrt(2.0)));
    CHECK(std::abs(v.norm_squared() - 1.0) <= 1e-12);
    CHECK(v.tail_mass(ModeIndex(0)) < kTailTolerance);
  }
  SUBCASE("Poisson populations") {
    const auto v = coherent_state(1.5, cutoff_for(1.5));
    double mean = 0.0;
    for (int k = 0; k < v.amps().size(); ++k) mean += k * std::norm(v.amps()(k));
    CHECK(mean == doctest::Approx(2.25).epsilon(1e-12));
  }
  SUBCASE("too small a cutoff") {
    try {
      coherent_state(3.0, 8);
      FAIL("expected TailTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TailTooLarge);
    }
  }
}

TEST_CASE("tensor and partial trace of a product") {
  const auto a = coherent_state(0.7, 16);
  const auto b = coherent_state(-0.4, 12);
  const auto ab = tensor(a, b);
  CHECK(ab.space().dims() == std::vector<int>{16, 12});
  const std::vector<ModeIndex> keep1{ModeIndex(1)};
  const std::vector<ModeIndex> keep0{ModeIndex(0)};
  const auto rb = partial_trace(ab, keep1);
  const auto ra = partial_trace(DensityMatrix::pure(ab), keep0);
  CHECK(trace_distance(rb, DensityMatrix::pure(b)) < 1e-13);
  CHECK(trace_distance(ra, DensityMatrix::pure(a)) < 1e-13);
}

TEST_CASE("density matrix basics") {
  FockSpace s({3});
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = 0.7;
  m(1, 1) = 0.3;
  const DensityMatrix rho(s, m);
  CHECK(rho.hermiticity_error() == 0.0);
  CHECK(rho.min_eigenvalue() == doctest::Approx(0.0));
  CHECK(rho.trace().real() == doctest::Approx(1.0));

  Eigen::MatrixXcd m2 = 2.0 * m;
  CHECK(DensityMatrix(s, m2).normalized().mat().isApprox(m));
  CHECK(trace_distance(rho, rho) == doctest::Approx(0.0));
  CHECK_THROWS_AS(DensityMatrix(FockSpace({2}), m), Error);
}

TEST_CASE("ensemble round trip") {
  const auto a = coherent_state(0.5, 12);
  const auto b = coherent_state(-0.5, 12);
  DensityMatrix rho(a.space(), 0.25 * DensityMatrix::pure(a).mat() +
                                   0.75 * DensityMatrix::pure(b).mat());
  const auto e = Ensemble::from_density(rho);
  CHECK(e.branches().size() == 2);
  CHECK(e.trace() == doctest::Approx(1.0));
  CHECK(trace_distance(e.to_density(), rho) < 1e-14);

  const auto ee = tensor(e, e);
  CHECK(ee.branches().size() == 4);
  CHECK(trace_distance(ee.to_density(), tensor(rho, rho)) < 1e-14);
}
