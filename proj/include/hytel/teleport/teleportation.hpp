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

#include <vector>

#include "hytel/bell/bell_measurement.hpp"
#include "hytel/hybrid/hybrid_states.hpp"
#include "hytel/teleport/direction.hpp"

namespace hytel {

struct OutcomeRecord {
  BellOutcome kind = BellOutcome::Fail;
  double probability = 0.0;
  double fidelity = 0.0;  // after the outcome's correction; 0 when probability is 0
  bool accepted = false;  // counted by the linear-optics success accounting
};

struct TeleportResult {
  Direction direction = Direction::S2C;
  Backend backend = Backend::Analytic;
  /// S2C, P2C: fidelity conditioned on B1 (equal to the B2 value after Z).
  /// C2S: over the accepted outcomes B1, B2. C2P: over B1..B4.
  double fidelity = 0.0;
  /// Probability-weighted fidelity over the accepted outcomes.
  double accepted_fidelity = 0.0;
  /// Protocol-level success probability (input averaged, closed form).
  double success_probability = 0.0;
  /// Probability of an accepted outcome for this input.
  double input_success_probability = 0.0;
  std::vector<OutcomeRecord> breakdown;  // B1..B4 and Fail, summing to 1
};

/// Analytic pipelines: contract the decohered channel against the Bell
/// projectors, apply ideal corrections, compare with the target.
/// Require alpha > 0 and r in [0, 1).
TeleportResult teleport_s2c(const QubitCoeffs& q, double alpha, double r);
TeleportResult teleport_c2s(const QubitCoeffs& q, double alpha, double r);
TeleportResult teleport_p2c(const QubitCoeffs& q, double alpha, double r);
TeleportResult teleport_c2p(const QubitCoeffs& q, double alpha, double r);
TeleportResult teleport(Direction d, const QubitCoeffs& q, double alpha, double r);

/// Truncated-Fock pipelines (alpha <= 3, else BackendOverflow): pure channel,
/// Kraus loss on every channel mode, Bell measurement through beam splitter
/// and detection projectors, ideal corrections, fidelity against the
/// truncated target.
TeleportResult teleport_numeric(Direction d, const QubitCoeffs& q, double alpha, double r);

/// Per-input fidelity of the dual-rail c->p pipeline.
double dual_rail_oracle_c2p(const QubitCoeffs& q, double alpha, double r);
/// Per-input B1-conditioned fidelity of the dual-rail p->c pipeline.
double dual_rail_oracle_p2c(const QubitCoeffs& q, double alpha, double r);

}  // namespace hytel
