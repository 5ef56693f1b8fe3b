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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hytel/averaging/averaging.hpp"

namespace hytel {

/// Pass/Fail for equivalences between backends, Flag for discrepancies in
/// published formulas or claims, Info for reported values.
enum class Verdict { Pass, Fail, Flag, Info };

std::string_view to_string(Verdict v);

struct CheckRecord {
  std::string name;
  std::size_t grid_size = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Info;
  std::string detail;
};

struct VerifyConfig {
  std::vector<double> alphas{0.5, 1.0, 2.0};  // numeric legs require alpha <= 3
  std::vector<double> rs{0.0, 0.3, 0.6, 0.9};
  int bloch_points = 10;  // per axis
  QuadratureSpec spec;
};

/// theta_i = i pi / (n - 1), phi_j = 2 pi j / n.
std::vector<std::pair<double, double>> bloch_grid(int n);

std::vector<CheckRecord> run_verify(const VerifyConfig& cfg);

/// One line per check: verdict, name, grid size, max deviation, tolerance, detail.
std::string format_report(const std::vector<CheckRecord>& checks);
bool any_failure(const std::vector<CheckRecord>& checks);

}  // namespace hytel
