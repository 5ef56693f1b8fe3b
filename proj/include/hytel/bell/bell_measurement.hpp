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
#include <vector>

#include <Eigen/Dense>

#include "hytel/fock/fock_space.hpp"
#include "hytel/hybrid/hybrid_states.hpp"

namespace hytel {

enum class BellOutcome { B1, B2, B3, B4, Fail };

std::string_view to_string(BellOutcome k);

/// Pauli frame to apply to the receiving qubit.
struct Correction {
  bool x = false;
  bool z = false;
  friend bool operator==(Correction, Correction) = default;
};

/// B1 none, B2 Z, B3 X, B4 X and Z. Fail has no correction.
Correction correction_for(BellOutcome k);

template <class State>
struct BsmOutcomeT {
  BellOutcome kind = BellOutcome::Fail;
  double probability = 0.0;
  std::optional<State> conditional;  // normalized; empty at zero probability
  Correction correction;
};

/// Numeric outcomes carry the state of the unmeasured modes.
using BsmOutcome = BsmOutcomeT<DensityMatrix>;
/// Analytic outcomes on a coherent-state receiver.
using CoherentBsmOutcome = BsmOutcomeT<CoherentBasisOp>;
/// Analytic outcomes on a discrete receiver (matrix over its basis).
using DiscreteBsmOutcome = BsmOutcomeT<Eigen::MatrixXcd>;

/// Coefficients B(i, j) of a Bell state over |i>|j>, i, j in {0, 1}:
///   B1 = (|00> + |11>)/sqrt2, B2 = (|00> - |11>)/sqrt2,
///   B3 = (|01> + |10>)/sqrt2, B4 = (|01> - |10>)/sqrt2.
Eigen::Matrix2d bell_coefficients(BellOutcome k);

/// Bell state on two single-rail modes of dimension `dim`.
FockState single_rail_bell_state(BellOutcome k, int dim);

// ---------------------------------------------------------------- single rail

/// Linear-optics Bell measurement on two single-rail modes: beam splitter,
/// then photon counting. (1,0) -> B3, (0,1) -> B4, every other pattern is
/// Fail. Conditionals are over the remaining modes. Both modes need room
/// for two photons (dimension >= 3).
std::vector<BsmOutcome> bsm_single_rail(const DensityMatrix& joint, ModeIndex m_in, ModeIndex m_ch);

/// Projection of (m_in, m_ch) onto one Bell state, implemented as the beam
/// splitter followed by projection onto the transformed Bell vector.
/// Returns probability and the remaining-mode state.
BsmOutcome project_single_rail_bell(const DensityMatrix& joint, ModeIndex m_in, ModeIndex m_ch,
                                    BellOutcome k);

/// All four Bell projections of a discrete input qubit against the discrete
/// half of a hybrid channel. The input occupies channel indices
/// `offset` and `offset + 1` (0 for single rail, 1 for polarization where
/// index 0 is the vacuum). Probability not covered by B1..B4 is Fail.
std::vector<CoherentBsmOutcome> bsm_discrete_analytic(const QubitCoeffs& q,
                                                      const HybridOperator& channel, int offset);

// ------------------------------------------------------------- coherent state

struct CoherentBellState {
  BellOutcome kind;
  double normalization;          // N+ for B1, B3; N- for B2, B4
  Eigen::Matrix2d coefficients;  // over |e_k>|e_l>, e_0 = |beta>, e_1 = |-beta>
};

/// The four coherent Bell states on basis amplitude beta = t alpha:
///   B1,2 = N+- (|b>|b> +- |-b>|-b>),  B3,4 = N+- (|b>|-b> +- |-b>|b>)
/// with N+- = (2 +- 2 e^{-4 beta^2})^{-1/2}. DegenerateBasis at beta = 0.
std::array<CoherentBellState, 4> coherent_bell_states(double alpha, double t);

/// Largest mode dimension the numeric coherent pipelines accept
/// (cutoff_for(3 sqrt2)); beyond it they raise BackendOverflow.
int numeric_dim_limit();

/// Coherent Bell measurement on modes (c, c2): beam splitter, then parity
/// with the other mode empty. O1 even>=2 on c, O2 odd on c, O3 even>=2 on
/// c2, O4 odd on c2; both empty is Fail. Outcomes are labelled B1..B4.
std::vector<BsmOutcome> bsm_coherent(const DensityMatrix& joint, ModeIndex c, ModeIndex c2);
std::vector<BsmOutcome> bsm_coherent(const Ensemble& joint, ModeIndex c, ModeIndex c2);

/// Analytic coherent Bell measurement of the input N(a|b> + b|-b>) against
/// the coherent half of `channel` (basis amplitude b = channel.beta()).
/// Conditionals live on the discrete side of the channel.
std::vector<DiscreteBsmOutcome> bsm_coherent_analytic(const QubitCoeffs& q,
                                                      const HybridOperator& channel);

}  // namespace hytel
