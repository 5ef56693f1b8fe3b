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

#include <nlohmann/json.hpp>

#include "hytel/teleport/direction.hpp"

namespace hytel {

struct PointConfig {
  Direction direction = Direction::S2C;
  double theta = 0.0;
  double phi = 0.0;
  double alpha = 1.0;
  double r = 0.0;
  Backend backend = Backend::Analytic;
};

/// Single teleportation run with its outcome breakdown and both closed forms.
nlohmann::json run_point(const PointConfig& cfg);

}  // namespace hytel
