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

#include "hytel/hybrid/hybrid_states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hytel/error.hpp"

namespace hytel {

QubitCoeffs QubitCoeffs::from_bloch(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(ErrorCode::InvalidArgument, "theta outside [0, pi]");
  }
  const cplx a = std::cos(0.5 * theta) * std::polar(1.0, 0.5 * phi);
  const cplx b = std::sin(0.5 * theta) * std::polar(1.0, -0.5 * phi);
  return QubitCoeffs(a, b);
}

QubitCoeffs QubitCoeffs::from_amplitudes(cplx a, cplx b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "|a|^2 + |b|^2 must be 1");
  }
  return QubitCoeffs(a, b);
}

double coherent_overlap(double beta) { return std::exp(-2.0 * beta * beta); }

CoherentBasisOp::CoherentBasisOp(double beta, const Eigen::Matrix2cd& coeffs)
    : beta_(beta), coeffs_(coeffs) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::InvalidArgument, "basis amplitude must be real and non-negative");
  }
}

Eigen::Matrix2d CoherentBasisOp::gram() const {
  const double g = gram_overlap();
  Eigen::Matrix2d m;
  m << 1.0, g, g, 1.0;
  return m;
}

cplx CoherentBasisOp::trace() const {
  // Tr(sum C_kl |e_k><e_l|) = sum C_kl <e_l|e_k> = tr(C G).
  return (coeffs_ * gram().cast<cplx>()).trace();
}

cplx CoherentBasisOp::overlap_with(const CoherentBasisOp& other) const {
  if (std::abs(beta_ - other.beta_) > 1e-15 * (1.0 + beta_)) {
    throw Error(ErrorCode::BasisMismatch, "operators live on different coherent bases");
  }
  const Eigen::Matrix2cd g = gram().cast<cplx>();
  return (coeffs_ * g * other.coeffs_ * g).trace();
}

cplx CoherentBasisOp::expectation(const Eigen::Vector2cd& c) const {
  const Eigen::Matrix2cd g = gram().cast<cplx>();
  const Eigen::Vector2cd gc = g * c;
  return gc.dot(coeffs_ * gc);
}

CoherentBasisOp CoherentBasisOp::normalized() const {
  const double tr = trace().real();
  if (!(tr > 0.0)) throw Error(ErrorCode::DegenerateBasis, "zero-trace coherent-basis operator");
  return CoherentBasisOp(beta_, coeffs_ / tr);
}

cplx overlap(const CoherentBasisOp& op1, const CoherentBasisOp& op2) {
  return op1.overlap_with(op2);
}

double target_normalization(const QubitCoeffs& q, double beta) {
  const double inv_sq = 1.0 + 2.0 * q.coherence().real() * coherent_overlap(beta);
  if (!(inv_sq > 1e-14)) {
    throw Error(ErrorCode::DegenerateBasis,
                "a|beta> + b|-beta> vanishes (beta = " + std::to_string(beta) + ")");
  }
  return 1.0 / std::sqrt(inv_sq);
}

CoherentBasisOp target_coherent_qubit(const QubitCoeffs& q, double alpha, double t) {
  const double beta = t * alpha;
  const double n = target_normalization(q, beta);
  Eigen::Vector2cd c(q.a(), q.b());
  c *= n;
  return CoherentBasisOp(beta, c * c.adjoint());
}

HybridOperator::HybridOperator(int discrete_dim, double beta)
    : dim_(discrete_dim), beta_(beta), r_(static_cast<std::size_t>(discrete_dim * discrete_dim * 4)) {
  if (discrete_dim < 1) throw Error(ErrorCode::InvalidArgument, "discrete dimension");
  if (!(beta >= 0.0)) throw Error(ErrorCode::InvalidArgument, "basis amplitude must be non-negative");
}

std::size_t HybridOperator::offset(int i, int j, int k, int l) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || k < 0 || l < 0 || k > 1 || l > 1) {
    throw Error(ErrorCode::ModeOutOfRange, "hybrid operator index");
  }
  return static_cast<std::size_t>(((i * dim_ + j) * 2 + k) * 2 + l);
}

cplx& HybridOperator::at(int i, int j, int k, int l) { return r_[offset(i, j, k, l)]; }
cplx HybridOperator::at(int i, int j, int k, int l) const { return r_[offset(i, j, k, l)]; }

cplx HybridOperator::trace() const {
  const double g = coherent_overlap(beta_);
  cplx tr = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) tr += at(i, i, k, l) * (k == l ? 1.0 : g);
    }
  }
  return tr;
}

HybridOperator ChannelState::as_operator() const {
  HybridOperator op(2, beta());
  op.at(0, 0, 0, 0) = vacuum_plus;
  op.at(1, 1, 1, 1) = one_minus;
  op.at(0, 0, 1, 1) = vacuum_minus;
  op.at(0, 1, 0, 1) = coherence;
  op.at(1, 0, 1, 0) = coherence;
  return op;
}

DiscreteEmbedding single_rail_embedding(int mode_dim) {
  return DiscreteEmbedding{{mode_dim}, {{0}, {1}}};
}

DiscreteEmbedding dual_rail_embedding(int mode_dim) {
  return DiscreteEmbedding{{mode_dim, mode_dim}, {{0, 0}, {1, 0}, {0, 1}}};
}

namespace {

Eigen::MatrixXcd coherent_pair(double beta, int cutoff) {
  Eigen::MatrixXcd v(cutoff, 2);
  v.col(0) = coherent_state(beta, cutoff).amps();
  v.col(1) = coherent_state(-beta, cutoff).amps();
  return v;
}

}  // namespace

DensityMatrix materialize(const CoherentBasisOp& op, int cutoff) {
  const Eigen::MatrixXcd v = coherent_pair(op.beta(), cutoff);
  return DensityMatrix(FockSpace({cutoff}), v * op.coeffs() * v.adjoint());
}

DensityMatrix materialize(const HybridOperator& op, const DiscreteEmbedding& embed, int cutoff) {
  if (static_cast<int>(embed.occupations.size()) != op.discrete_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "embedding does not match discrete dimension");
  }
  const FockSpace discrete(embed.mode_dims);
  std::vector<int> dims = embed.mode_dims;
  dims.push_back(cutoff);
  const FockSpace space(dims);
  const Eigen::MatrixXcd v = coherent_pair(op.beta(), cutoff);
  const auto n = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const auto c = static_cast<Eigen::Index>(cutoff);
  for (int i = 0; i < op.discrete_dim(); ++i) {
    const auto row = static_cast<Eigen::Index>(discrete.flat_index(embed.occupations[static_cast<std::size_t>(i)])) * c;
    for (int j = 0; j < op.discrete_dim(); ++j) {
      const auto col = static_cast<Eigen::Index>(discrete.flat_index(embed.occupations[static_cast<std::size_t>(j)])) * c;
      Eigen::Matrix2cd coeffs;
      coeffs << op.at(i, j, 0, 0), op.at(i, j, 0, 1), op.at(i, j, 1, 0), op.at(i, j, 1, 1);
      if (coeffs.isZero(0.0)) continue;
      m.block(row, col, c, c) += v * coeffs * v.adjoint();
    }
  }
  return DensityMatrix(space, std::move(m));
}

DensityMatrix materialize(const ChannelState& channel, int cutoff) {
  return materialize(channel.as_operator(), single_rail_embedding(), cutoff);
}

}  // namespace hytel
