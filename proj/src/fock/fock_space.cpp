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

#include "hytel/fock/fock_space.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "hytel/error.hpp"

namespace hytel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::CutoffMismatch: return "CutoffMismatch";
    case ErrorCode::TruncationLeakage: return "TruncationLeakage";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ModeOutOfRange: return "ModeOutOfRange";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::ModeNotSingleRail: return "ModeNotSingleRail";
    case ErrorCode::BackendOverflow: return "BackendOverflow";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::UnsupportedDirection: return "UnsupportedDirection";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int cutoff_for(double amplitude) {
  const double a = std::abs(amplitude);
  return static_cast<int>(std::ceil(a * a + 8.0 * a + 12.0));
}

FockSpace::FockSpace(std::vector<int> dims) : dims_(std::move(dims)) {
  strides_.assign(dims_.size(), 1);
  size_ = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (dims_[i] < 1) {
      throw Error(ErrorCode::InvalidArgument, "mode dimension must be positive");
    }
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(dims_[i]);
  }
}

void FockSpace::check_mode(ModeIndex m) const {
  if (m.value < 0 || static_cast<std::size_t>(m.value) >= dims_.size()) {
    throw Error(ErrorCode::ModeOutOfRange,
                "mode " + std::to_string(m.value) + " of " + std::to_string(dims_.size()));
  }
}

int FockSpace::dim(ModeIndex m) const {
  check_mode(m);
  return dims_[static_cast<std::size_t>(m.value)];
}

std::size_t FockSpace::stride(ModeIndex m) const {
  check_mode(m);
  return strides_[static_cast<std::size_t>(m.value)];
}

int FockSpace::occupation(std::size_t flat, ModeIndex m) const {
  const auto i = static_cast<std::size_t>(m.value);
  return static_cast<int>((flat / strides_[i]) % static_cast<std::size_t>(dims_[i]));
}

std::size_t FockSpace::flat_index(std::span<const int> occupations) const {
  if (occupations.size() != dims_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "occupation tuple length");
  }
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (occupations[i] < 0 || occupations[i] >= dims_[i]) {
      throw Error(ErrorCode::ModeOutOfRange, "occupation beyond truncation");
    }
    flat += static_cast<std::size_t>(occupations[i]) * strides_[i];
  }
  return flat;
}

FockSpace FockSpace::sub_space(std::span<const ModeIndex> modes) const {
  std::vector<int> d;
  d.reserve(modes.size());
  for (auto m : modes) d.push_back(dim(m));
  return FockSpace(std::move(d));
}

FockSpace tensor(const FockSpace& a, const FockSpace& b) {
  std::vector<int> d = a.dims();
  d.insert(d.end(), b.dims().begin(), b.dims().end());
  return FockSpace(std::move(d));
}

FockState::FockState(FockSpace space, Eigen::VectorXcd amps)
    : space_(std::move(space)), amps_(std::move(amps)) {
  if (static_cast<std::size_t>(amps_.size()) != space_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "amplitude vector does not match space");
  }
}

FockState FockState::basis(FockSpace space, std::span<const int> occupations) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.size()));
  v(static_cast<Eigen::Index>(space.flat_index(occupations))) = 1.0;
  return FockState(std::move(space), std::move(v));
}

FockState FockState::normalized() const {
  const double n = amps_.norm();
  if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize zero state");
  return FockState(space_, amps_ / n);
}

double FockState::tail_mass(ModeIndex m) const {
  const int d = space_.dim(m);
  double mass = 0.0;
  for (std::size_t i = 0; i < space_.size(); ++i) {
    if (space_.occupation(i, m) >= d - 2) mass += std::norm(amps_(static_cast<Eigen::Index>(i)));
  }
  return mass;
}

DensityMatrix::DensityMatrix(FockSpace space, Eigen::MatrixXcd mat)
    : space_(std::move(space)), mat_(std::move(mat)) {
  const auto n = static_cast<Eigen::Index>(space_.size());
  if (mat_.rows() != n || mat_.cols() != n) {
    throw Error(ErrorCode::ShapeMismatch, "density matrix does not match space");
  }
}

DensityMatrix DensityMatrix::pure(const FockState& psi) {
  return DensityMatrix(psi.space(), psi.amps() * psi.amps().adjoint());
}

double DensityMatrix::hermiticity_error() const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd h = 0.5 * (mat_ + mat_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::normalized() const {
  const double tr = mat_.trace().real();
  if (tr <= 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize zero-trace operator");
  return DensityMatrix(space_, mat_ / tr);
}

Ensemble Ensemble::from_density(const DensityMatrix& rho, double floor) {
  const Eigen::MatrixXcd h = 0.5 * (rho.mat() + rho.mat().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Ensemble out(rho.space());
  const auto& vals = es.eigenvalues();
  for (Eigen::Index k = vals.size(); k-- > 0;) {
    if (vals(k) > floor) out.add(std::sqrt(vals(k)) * es.eigenvectors().col(k));
  }
  return out;
}

double Ensemble::trace() const {
  double t = 0.0;
  for (const auto& v : branches_) t += v.squaredNorm();
  return t;
}

DensityMatrix Ensemble::to_density() const {
  const auto n = static_cast<Eigen::Index>(space_.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& v : branches_) m.noalias() += v * v.adjoint();
  return DensityMatrix(space_, std::move(m));
}

FockState coherent_state(double alpha, int cutoff) {
  if (cutoff < 3) throw Error(ErrorCode::InvalidArgument, "cutoff below 3");
  Eigen::VectorXcd v(cutoff);
  // Recurrence c_n = c_{n-1} * alpha / sqrt(n) avoids factorial overflow.
  double c = std::exp(-0.5 * alpha * alpha);
  double kept = 0.0;
  double edge = 0.0;
  for (int n = 0; n < cutoff; ++n) {
    if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
    v(n) = c;
    kept += c * c;
    if (n >= cutoff - 2) edge += c * c;
  }
  const double tail = (1.0 - kept) + edge;
  if (tail > kTailTolerance) {
    throw Error(ErrorCode::TailTooLarge, "coherent amplitude " + std::to_string(alpha) +
                                             " needs more than " + std::to_string(cutoff) +
                                             " levels");
  }
  v /= std::sqrt(kept);
  return FockState(FockSpace({cutoff}), std::move(v));
}

FockState tensor(const FockState& a, const FockState& b) {
  Eigen::VectorXcd v(a.amps().size() * b.amps().size());
  for (Eigen::Index i = 0; i < a.amps().size(); ++i) {
    v.segment(i * b.amps().size(), b.amps().size()) = a.amps()(i) * b.amps();
  }
  return FockState(tensor(a.space(), b.space()), std::move(v));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const Eigen::Index nb = b.mat().rows();
  Eigen::MatrixXcd m(a.mat().rows() * nb, a.mat().cols() * nb);
  for (Eigen::Index i = 0; i < a.mat().rows(); ++i) {
    for (Eigen::Index j = 0; j < a.mat().cols(); ++j) {
      m.block(i * nb, j * nb, nb, nb) = a.mat()(i, j) * b.mat();
    }
  }
  return DensityMatrix(tensor(a.space(), b.space()), std::move(m));
}

Ensemble tensor(const Ensemble& a, const Ensemble& b) {
  Ensemble out(tensor(a.space(), b.space()));
  for (const auto& va : a.branches()) {
    for (const auto& vb : b.branches()) {
      out.add(tensor(FockState(a.space(), va), FockState(b.space(), vb)).amps());
    }
  }
  return out;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::ShapeMismatch, "trace_distance");
  const Eigen::MatrixXcd d = a.mat() - b.mat();
  const Eigen::MatrixXcd h = 0.5 * (d + d.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace hytel
