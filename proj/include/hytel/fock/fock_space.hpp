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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hytel {

using cplx = std::complex<double>;

/// Probability mass allowed beyond a truncated mode.
inline constexpr double kTailTolerance = 1e-12;

/// Strong type for a mode label within a multi-mode Fock space.
struct ModeIndex {
  int value = 0;
  constexpr explicit ModeIndex(int v) : value(v) {}
  friend constexpr bool operator==(ModeIndex, ModeIndex) = default;
};

/// Truncation N_max (per-mode dimension) for a computation whose largest
/// coherent amplitude is `amplitude`: ceil(a^2 + 8a + 12).
int cutoff_for(double amplitude);

/// Tensor-product Fock space with a per-mode dimension. Flat indices are
/// row-major: mode 0 is the most significant digit.
class FockSpace {
 public:
  FockSpace() = default;
  explicit FockSpace(std::vector<int> dims);

  std::size_t num_modes() const { return dims_.size(); }
  int dim(ModeIndex m) const;
  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return size_; }
  std::size_t stride(ModeIndex m) const;

  /// Photon number of mode `m` in basis state `flat`.
  int occupation(std::size_t flat, ModeIndex m) const;
  std::size_t flat_index(std::span<const int> occupations) const;

  /// Subspace made of the listed modes, in the listed order.
  FockSpace sub_space(std::span<const ModeIndex> modes) const;
  void check_mode(ModeIndex m) const;

  friend bool operator==(const FockSpace& a, const FockSpace& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

FockSpace tensor(const FockSpace& a, const FockSpace& b);

/// Pure state over a truncated multi-mode Fock space.
class FockState {
 public:
  FockState() = default;
  FockState(FockSpace space, Eigen::VectorXcd amps);

  /// Normalized basis state |n_0, n_1, ...>.
  static FockState basis(FockSpace space, std::span<const int> occupations);

  const FockSpace& space() const { return space_; }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Eigen::VectorXcd& amps() { return amps_; }

  double norm_squared() const { return amps_.squaredNorm(); }
  FockState normalized() const;
  /// Probability at n >= dim - 2 in mode `m`.
  double tail_mass(ModeIndex m) const;

 private:
  FockSpace space_;
  Eigen::VectorXcd amps_;
};

/// Density operator over a truncated multi-mode Fock space.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(FockSpace space, Eigen::MatrixXcd mat);

  static DensityMatrix pure(const FockState& psi);

  const FockSpace& space() const { return space_; }
  const Eigen::MatrixXcd& mat() const { return mat_; }
  Eigen::MatrixXcd& mat() { return mat_; }

  cplx trace() const { return mat_.trace(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;
  DensityMatrix normalized() const;

 private:
  FockSpace space_;
  Eigen::MatrixXcd mat_;
};

/// rho = sum_k |v_k><v_k| with unnormalized branch vectors. Used where the
/// full density matrix would be too large to form (two coherent modes).
class Ensemble {
 public:
  Ensemble() = default;
  explicit Ensemble(FockSpace space) : space_(std::move(space)) {}

  /// Spectral decomposition; eigenvalues below `floor` are dropped.
  static Ensemble from_density(const DensityMatrix& rho, double floor = 1e-15);

  const FockSpace& space() const { return space_; }
  const std::vector<Eigen::VectorXcd>& branches() const { return branches_; }
  std::vector<Eigen::VectorXcd>& branches() { return branches_; }
  void add(Eigen::VectorXcd v) { branches_.push_back(std::move(v)); }

  double trace() const;
  DensityMatrix to_density() const;

 private:
  FockSpace space_;
  std::vector<Eigen::VectorXcd> branches_;
};

/// Coherent state |alpha> truncated to `cutoff` levels and renormalized.
/// Throws TailTooLarge if the discarded plus edge mass exceeds kTailTolerance.
FockState coherent_state(double alpha, int cutoff);

FockState tensor(const FockState& a, const FockState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
Ensemble tensor(const Ensemble& a, const Ensemble& b);

/// Trace norm of (a - b) / 2.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace hytel
