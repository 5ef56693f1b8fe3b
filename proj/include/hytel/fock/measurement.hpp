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

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hytel/fock/fock_space.hpp"

namespace hytel {

/// Projector diagonal in the Fock basis of `modes`: keeps the basis states
/// whose photon-number tuple (in the order of `modes`) satisfies `accept`.
struct PatternProjector {
  std::vector<ModeIndex> modes;
  std::function<bool(std::span<const int>)> accept;
};

/// Rank-one projector |v><v| on `modes` (identity elsewhere). `vector` lives
/// on the sub-space of `modes`, in that order, and is normalized on use.
struct VectorProjector {
  std::vector<ModeIndex> modes;
  FockState vector;
};

using Projector = std::variant<PatternProjector, VectorProjector>;

/// Photon-number pattern test on the listed modes.
PatternProjector pattern_projector(std::vector<ModeIndex> modes, std::vector<int> pattern);

struct Projection {
  double probability = 0.0;
  std::optional<DensityMatrix> conditional;  // empty when probability is zero
};

struct EnsembleProjection {
  double probability = 0.0;
  Ensemble unnormalized;  // P rho P without renormalization
};

/// Tr(P rho P) and P rho P / Tr(P rho P). Probabilities below `zero_floor`
/// are reported as zero with no conditional state.
Projection project(const DensityMatrix& rho, const Projector& projector,
                   double zero_floor = 1e-300);
EnsembleProjection project(const Ensemble& rho, const Projector& projector);
FockState project_unnormalized(const FockState& psi, const Projector& projector);

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const ModeIndex> keep);
DensityMatrix partial_trace(const FockState& psi, std::span<const ModeIndex> keep);
DensityMatrix partial_trace(const Ensemble& rho, std::span<const ModeIndex> keep);

/// <target|rho|target>. ShapeMismatch if the spaces differ.
double fidelity(const FockState& target, const DensityMatrix& rho);
inline double clamp_unit(double f) { return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f); }

/// Apply an operator acting on `modes` (matrix over their sub-space) to a
/// vector, or as A rho A^+ to a density matrix.
Eigen::VectorXcd apply_local(const FockSpace& space, const Eigen::VectorXcd& v,
                             std::span<const ModeIndex> modes, const Eigen::MatrixXcd& op);
DensityMatrix apply_local(const DensityMatrix& rho, std::span<const ModeIndex> modes,
                          const Eigen::MatrixXcd& op);

/// Swap the contents of two modes of equal dimension.
DensityMatrix swap_modes(const DensityMatrix& rho, ModeIndex m1, ModeIndex m2);

}  // namespace hytel
