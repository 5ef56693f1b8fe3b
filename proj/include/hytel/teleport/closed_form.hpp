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

#include "hytel/hybrid/hybrid_states.hpp"
#include "hytel/teleport/direction.hpp"

namespace hytel {

/// Per-input fidelity from the closed-form expressions. The variants differ
/// for C2P (cross term e^{-2a^2(1-t^2)} |a|^2|b|^2 printed, twice that
/// corrected) and P2C (printed cross term conjugated the wrong way round).
double fidelity_closed_form(Direction d, const QubitCoeffs& q, double alpha, double r,
                            Variant v = Variant::Printed);

struct SuccessValue {
  double value = 0.0;
  bool limit = false;  // analytic limit reported instead of evaluating a singular form
};

/// Protocol success probability averaged over inputs:
///   S2C 1/2, C2S (1 - e^{-2t^2a^2})/2, P2C t^2/2,
///   C2P ((e^{2a^2t^2} - 1)/2) ln((1 + e^{-2a^2t^2})/(1 - e^{-2a^2t^2})).
/// C2P at t alpha = 0 returns the limit 0 with `limit` set.
SuccessValue success_prob_detail(Direction d, double alpha, double r);
double success_prob(Direction d, double alpha, double r);

/// Closed-form Bloch averages. C2S printed: 2/3 + (t^2 + 2te^{-2a^2(1-t^2)})/6,
/// corrected: 1/2 + (same)/6. C2P: t^2 (2 + e^{-2a^2(1-t^2)})/3 for both.
/// UnsupportedDirection for S2C and P2C.
double average_fidelity_closed(Direction d, double alpha, double r,
                               Variant v = Variant::Printed);

inline constexpr double kClassicalLimit = 2.0 / 3.0;

}  // namespace hytel
