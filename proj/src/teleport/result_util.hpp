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

#include "hytel/fock/measurement.hpp"
#include "hytel/teleport/teleportation.hpp"

namespace hytel::detail {

// Linear-optics accounting: photon-counting pairs for discrete senders,
// parity outcomes without an X correction for c->s, and every parity
// outcome for c->p where X is a wave plate.
inline bool accepted_for(Direction d, BellOutcome k) {
  if (k == BellOutcome::Fail) return false;
  switch (d) {
    case Direction::S2C:
    case Direction::P2C: return k == BellOutcome::B3 || k == BellOutcome::B4;
    case Direction::C2S: return k == BellOutcome::B1 || k == BellOutcome::B2;
    case Direction::C2P: return true;
  }
  return false;
}

inline void finish(TeleportResult& res) {
  const bool conditioned_on_b1 = res.direction == Direction::S2C || res.direction == Direction::P2C;
  double acc_p = 0.0;
  double acc_f = 0.0;
  double b1 = 0.0;
  for (const auto& o : res.breakdown) {
    if (o.accepted) {
      acc_p += o.probability;
      acc_f += o.probability * o.fidelity;
    }
    if (o.kind == BellOutcome::B1) b1 = o.fidelity;
  }
  res.input_success_probability = acc_p;
  res.accepted_fidelity = acc_p > 0.0 ? clamp_unit(acc_f / acc_p) : 0.0;
  res.fidelity = conditioned_on_b1 ? b1 : res.accepted_fidelity;
}

}  // namespace hytel::detail
