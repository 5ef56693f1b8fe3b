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
#include <optional>
#include <string_view>

namespace hytel {

/// s = single rail, c = coherent state, p = polarization.
enum class Direction { S2C, C2S, P2C, C2P };

inline constexpr std::array<Direction, 4> kAllDirections{Direction::S2C, Direction::C2S,
                                                         Direction::P2C, Direction::C2P};

/// "s2c", "c2s", "p2c", "c2p".
std::string_view to_string(Direction d);
/// Accepts the lower- or upper-case short names.
std::optional<Direction> parse_direction(std::string_view s);

/// Printed: the formula as published. Corrected: the form confirmed by the
/// numeric oracle (identical where no discrepancy exists).
enum class Variant { Printed, Corrected };

enum class Backend { Analytic, Numeric };
std::string_view to_string(Backend b);

}  // namespace hytel
