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

#include "hytel/loss/loss_channel.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hytel/error.hpp"
#include "hytel/fock/measurement.hpp"

namespace hytel {

LossParams LossParams::from_t(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorCode::InvalidArgument, "t must lie in (0, 1]");
  const double loss = (1.0 - t) * (1.0 + t);
  return LossParams(t, std::sqrt(loss), loss);
}

LossParams LossParams::from_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1)");
  return LossParams(std::sqrt((1.0 - r) * (1.0 + r)), r, r * r);
}

LossParams LossParams::from_gamma_tau(double gamma_tau) {
  if (!(gamma_tau >= 0.0) || !std::isfinite(gamma_tau)) {
    throw Error(ErrorCode::InvalidArgument, "gamma tau must be finite and non-negative");
  }
  const double loss = -std::expm1(-gamma_tau);
  return LossParams(std::exp(-0.5 * gamma_tau), std::sqrt(loss), loss);
}

std::vector<Eigen::MatrixXd> loss_kraus_operators(const LossParams& p, int dim) {
  std::vector<Eigen::MatrixXd> ops;
  ops.reserve(static_cast<std::size_t>(dim));
  const double log_t2 = 2.0 * std::log(p.t());
  const double log_loss = p.loss() > 0.0 ? std::log(p.loss()) : 0.0;
  for (int k = 0; k < dim; ++k) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(dim, dim);
    bool any = false;
    for (int n = k; n < dim; ++n) {
      double w;
      if (k == 0) {
        w = std::exp(0.5 * n * log_t2);
      } else if (p.loss() == 0.0) {
        w = 0.0;
      } else {
        const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
        w = std::exp(0.5 * (log_binom + (n - k) * log_t2 + k * log_loss));
      }
      e(n - k, n) = w;
      any = any || w != 0.0;
    }
    if (any) ops.push_back(std::move(e));
  }
  return ops;
}

DensityMatrix kraus_loss(const DensityMatrix& rho, const LossParams& p,
                         std::span<const ModeIndex> modes) {
  DensityMatrix out = rho;
  for (auto m : modes) {
    const int dim = out.space().dim(m);
    const auto kraus = loss_kraus_operators(p, dim);
    const std::array<ModeIndex, 1> mode{m};
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(out.mat().rows(), out.mat().cols());
    for (const auto& e : kraus) acc += apply_local(out, mode, e.cast<cplx>()).mat();
    out = DensityMatrix(out.space(), std::move(acc));
  }
  return out;
}

ChannelState decohere_hybrid(double alpha, const LossParams& p) {
  if (!(alpha >= 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be non-negative");
  const double t = p.t();
  ChannelState c;
  c.alpha = alpha;
  c.t = t;
  c.vacuum_plus = 0.5;
  c.one_minus = 0.5 * t * t;
  c.vacuum_minus = 0.5 * p.loss();
  c.coherence = 0.5 * t * std::exp(-2.0 * alpha * alpha * p.loss());
  return c;
}

HybridOperator decohere_polarization_hybrid(double alpha, const LossParams& p) {
  if (!(alpha >= 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be non-negative");
  const double t2 = p.t() * p.t();
  HybridOperator op(3, p.t() * alpha);
  op.at(1, 1, 0, 0) = 0.5 * t2;
  op.at(2, 2, 1, 1) = 0.5 * t2;
  op.at(0, 0, 0, 0) = 0.5 * p.loss();
  op.at(0, 0, 1, 1) = 0.5 * p.loss();
  const double coh = 0.5 * t2 * std::exp(-2.0 * alpha * alpha * p.loss());
  op.at(1, 2, 0, 1) = coh;
  op.at(2, 1, 1, 0) = coh;
  return op;
}

FockState hybrid_channel_pure(double alpha, int rail_dim, int cutoff) {
  const FockState plus = coherent_state(alpha, cutoff);
  const FockState minus = coherent_state(-alpha, cutoff);
  const FockSpace rail({rail_dim});
  const std::array<int, 1> zero{0};
  const std::array<int, 1> one{1};
  FockState a = tensor(FockState::basis(rail, zero), plus);
  const FockState b = tensor(FockState::basis(rail, one), minus);
  a.amps() = (a.amps() + b.amps()) / std::numbers::sqrt2;
  return a;
}

FockState polarization_channel_pure(double alpha, int rail_dim, int cutoff) {
  const FockState plus = coherent_state(alpha, cutoff);
  const FockState minus = coherent_state(-alpha, cutoff);
  const FockSpace rails({rail_dim, rail_dim});
  const std::array<int, 2> h{1, 0};
  const std::array<int, 2> v{0, 1};
  FockState a = tensor(FockState::basis(rails, h), plus);
  const FockState b = tensor(FockState::basis(rails, v), minus);
  a.amps() = (a.amps() + b.amps()) / std::numbers::sqrt2;
  return a;
}

}  // namespace hytel
