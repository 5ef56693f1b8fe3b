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

#include <memory>
#include <vector>

#include "hytel/fock/fock_space.hpp"

namespace hytel {

/// Matrix elements of the 50:50 beam splitter acting on two modes that are
/// each truncated to `dim` levels.
///
/// Convention: creation operators transform as
///   U a0^+ U^+ = (a0^+ - a1^+)/sqrt(2),   U a1^+ U^+ = (a0^+ + a1^+)/sqrt(2),
/// so |x>|y> -> |(x+y)/sqrt(2)>|(y-x)/sqrt(2)> for coherent amplitudes, and
/// (|01> + |10>)/sqrt(2) -> |10>, (|01> - |10>)/sqrt(2) -> |01>.
/// Applying it twice gives a0^+ -> -a1^+, a1^+ -> a0^+; four times gives (-1)^N.
class BeamSplitterTable {
 public:
  explicit BeamSplitterTable(int dim);

  int dim() const { return dim_; }

  /// Amplitudes of U|k, m> over the output states |j, k+m-j>, j = 0..k+m
  /// (untruncated).
  const std::vector<double>& column(int k, int m) const {
    return columns_[static_cast<std::size_t>(k) * dim_ + m];
  }

 private:
  int dim_;
  std::vector<std::vector<double>> columns_;
};

/// Shared, lazily built table; thread-safe.
std::shared_ptr<const BeamSplitterTable> beam_splitter_table(int dim);

/// Apply the beam splitter to modes (m1 as a0, m2 as a1). Both modes must
/// share a dimension (CutoffMismatch). Mass pushed above the truncation is
/// dropped and must stay below `leak_tolerance` (TruncationLeakage).
FockState beam_splitter(const FockState& psi, ModeIndex m1, ModeIndex m2,
                        double leak_tolerance = kTailTolerance);
DensityMatrix beam_splitter(const DensityMatrix& rho, ModeIndex m1, ModeIndex m2,
                            double leak_tolerance = kTailTolerance);
Ensemble beam_splitter(const Ensemble& rho, ModeIndex m1, ModeIndex m2,
                       double leak_tolerance = kTailTolerance);

}  // namespace hytel
