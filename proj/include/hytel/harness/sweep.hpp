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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hytel/averaging/averaging.hpp"
#include "hytel/teleport/direction.hpp"

namespace hytel {

enum class BackendPolicy { Analytic, Numeric, Both };

std::string_view to_string(BackendPolicy b);
std::optional<BackendPolicy> parse_backend_policy(std::string_view s);

struct SweepConfig {
  std::vector<Direction> directions;
  std::vector<double> alphas;
  double r_min = 0.0;
  double r_max = 0.999;
  int r_steps = 201;
  QuadratureSpec spec;
  BackendPolicy backend = BackendPolicy::Analytic;
  std::string out;
  int threads = 1;
};

/// fig1: s2c + c2s fidelities; fig2: c2s success; fig3, fig4: all four
/// directions. alpha in {0.5, 1, 2, 10}, r in [0, 0.999] over 201 points.
SweepConfig preset_config(std::string_view name);

/// InvalidArgument on an empty direction or alpha list, alpha <= 0,
/// r outside [0, 1), r_min > r_max, fewer than 2 steps or a bad spec.
void validate(const SweepConfig& cfg);

std::vector<double> r_grid(const SweepConfig& cfg);

struct SweepRecord {
  Direction direction = Direction::S2C;
  double alpha = 0.0;
  double r = 0.0;
  double t = 1.0;
  double avg_fidelity = 0.0;
  std::optional<double> avg_fidelity_closed_printed;
  std::optional<double> avg_fidelity_closed_corrected;
  double success_probability = 0.0;
  std::string backend;
  std::string convergence_flag;  // "ok" or ';'-joined flags
};

SweepRecord evaluate_point(Direction d, double alpha, double r, const SweepConfig& cfg);

/// All grid points, ordered by (direction, alpha, r); identical for any
/// thread count.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

/// printf "%.12g"; empty for a missing value.
std::string format_number(std::optional<double> v);
std::string csv_header();
std::string to_csv(const std::vector<SweepRecord>& rows);

}  // namespace hytel
