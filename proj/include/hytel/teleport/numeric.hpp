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

#pragma once

#include <array>
#include <memory>

#include <Eigen/Dense>

#include "hytel/hybrid/hybrid_states.hpp"
#include "hytel/teleport/teleportation.hpp"

namespace hytel {

/// Receiver-side response of a numeric pipeline, tabulated on four pure
/// inputs (|0>, |1>, |+>, |+i> in the sender's coefficient space). The
/// pipeline is linear in the input density operator, so any input is a
/// combination of these. Build once per (direction, alpha, r).
class NumericProcess {
 public:
  NumericProcess(Direction d, double alpha, double r);

  Direction direction() const { return dir_; }
  int cutoff() const { return cutoff_; }

  TeleportResult evaluate(const QubitCoeffs& q) const;
  /// Per-input fidelity as reported in TeleportResult::fidelity.
  double fidelity(const QubitCoeffs& q) const { return evaluate(q).fidelity; }

  /// Accepted-outcome and Fail probabilities for the uniform mixture of the
  /// two basis inputs (the maximally mixed single-rail input, or the equal
  /// mixture of |t a> and |-t a> for a coherent sender).
  double mixed_input_success() const;
  double mixed_input_fail() const;

 private:
  Direction dir_;
  double alpha_;
  double r_;
  double t_;
  int cutoff_;
  Eigen::MatrixXcd pair_;  // truncated |t a>, |-t a> (coherent receivers)
  // [outcome B1..B4, Fail][basis input] unnormalized corrected receiver state
  std::array<std::array<Eigen::MatrixXcd, 4>, 5> resp_;
  std::array<std::array<double, 4>, 5> prob_{};
};

}  // namespace hytel
