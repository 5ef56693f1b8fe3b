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

#include <span>
#include <vector>

#include "hytel/fock/fock_space.hpp"
#include "hytel/hybrid/hybrid_states.hpp"

namespace hytel {

/// Photon-loss strength. t = e^{-gamma tau / 2} is the amplitude decay
/// factor and r = sqrt(1 - t^2) the normalized interaction time.
class LossParams {
 public:
  /// t in (0, 1].
  static LossParams from_t(double t);
  /// r in [0, 1).
  static LossParams from_r(double r);
  static LossParams from_gamma_tau(double gamma_tau);

  double t() const { return t_; }
  double r() const { return r_; }
  /// 1 - t^2, computed without cancellation from whichever side was given.
  double loss() const { return loss_; }

 private:
  LossParams(double t, double r, double loss) : t_(t), r_(r), loss_(loss) {}
  double t_;
  double r_;
  double loss_;
};

/// Kraus operators E_k = sum_n sqrt(C(n,k) t^{2(n-k)} (1-t^2)^k) |n-k><n|
/// for a mode truncated to `dim` levels, k = 0..dim-1.
std::vector<Eigen::MatrixXd> loss_kraus_operators(const LossParams& p, int dim);

/// Amplitude damping with the same t on every listed mode.
DensityMatrix kraus_loss(const DensityMatrix& rho, const LossParams& p,
                         std::span<const ModeIndex> modes);

/// Closed-form decohered hybrid channel for the initial state
/// (|0>|alpha> + |1>|-alpha>)/sqrt(2) after loss `p` on both modes.
ChannelState decohere_hybrid(double alpha, const LossParams& p);

/// Decohered polarization/coherent channel (|H>|alpha> + |V>|-alpha>)/sqrt(2)
/// with discrete basis {vacuum, H, V}.
HybridOperator decohere_polarization_hybrid(double alpha, const LossParams& p);

/// (|0>|alpha> + |1>|-alpha>)/sqrt(2) on (single-rail mode of `rail_dim`,
/// coherent mode of `cutoff` levels).
FockState hybrid_channel_pure(double alpha, int rail_dim, int cutoff);
/// (|1,0>|alpha> + |0,1>|-alpha>)/sqrt(2) on (rail h, rail v, coherent mode).
FockState polarization_channel_pure(double alpha, int rail_dim, int cutoff);

}  // namespace hytel
