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
#include <vector>

#include <Eigen/Dense>

#include "hytel/fock/fock_space.hpp"

namespace hytel {

/// Input/target qubit coefficients, a|0> + b|1> or a|t alpha> + b|-t alpha>.
class QubitCoeffs {
 public:
  /// a = cos(theta/2) e^{i phi/2}, b = sin(theta/2) e^{-i phi/2}.
  static QubitCoeffs from_bloch(double theta, double phi);
  /// Requires |a|^2 + |b|^2 = 1 to 1e-12.
  static QubitCoeffs from_amplitudes(cplx a, cplx b);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  double pa() const { return std::norm(a_); }
  double pb() const { return std::norm(b_); }
  /// a b^*
  cplx coherence() const { return a_ * std::conj(b_); }

 private:
  QubitCoeffs(cplx a, cplx b) : a_(a), b_(b) {}
  cplx a_;
  cplx b_;
};

/// Overlap <beta|-beta> = exp(-2 beta^2) of the dynamic coherent basis.
double coherent_overlap(double beta);

/// Operator sum_{kl} C_kl |e_k><e_l| in the non-orthogonal basis
/// e_0 = |beta>, e_1 = |-beta>, with Gram matrix [[1, g], [g, 1]].
class CoherentBasisOp {
 public:
  /// Rejects beta < 0 (a real non-negative basis amplitude).
  CoherentBasisOp(double beta, const Eigen::Matrix2cd& coeffs);

  double beta() const { return beta_; }
  const Eigen::Matrix2cd& coeffs() const { return coeffs_; }
  double gram_overlap() const { return coherent_overlap(beta_); }
  Eigen::Matrix2d gram() const;

  cplx trace() const;
  double purity() const { return overlap_with(*this).real(); }
  /// Tr(this * other) via Gram contraction. BasisMismatch on different beta.
  cplx overlap_with(const CoherentBasisOp& other) const;
  /// <psi|op|psi> for psi = sum_k c_k e_k (c need not be normalized).
  cplx expectation(const Eigen::Vector2cd& c) const;
  CoherentBasisOp normalized() const;

 private:
  double beta_;
  Eigen::Matrix2cd coeffs_;
};

cplx overlap(const CoherentBasisOp& op1, const CoherentBasisOp& op2);

/// Normalization N = (1 + (a b^* + a^* b) e^{-2 t^2 alpha^2})^{-1/2} of
/// a|t alpha> + b|-t alpha>. DegenerateBasis when the state vanishes.
double target_normalization(const QubitCoeffs& q, double beta);

/// Pure projector of N(a|t alpha> + b|-t alpha>).
CoherentBasisOp target_coherent_qubit(const QubitCoeffs& q, double alpha, double t);

/// Operator on (discrete system) x (coherent mode):
///   sum R(i,j,k,l) |i><j| (x) |e_k><e_l|
/// with an orthonormal discrete basis {|i>} and the coherent pair e_0, e_1.
class HybridOperator {
 public:
  HybridOperator(int discrete_dim, double beta);

  int discrete_dim() const { return dim_; }
  double beta() const { return beta_; }
  cplx& at(int i, int j, int k, int l);
  cplx at(int i, int j, int k, int l) const;

  /// Trace through the Gram metric.
  cplx trace() const;

 private:
  std::size_t offset(int i, int j, int k, int l) const;
  int dim_;
  double beta_;
  std::vector<cplx> r_;
};

/// The decohered single-rail / coherent-state channel: the four terms
///   1/2 |0><0| (x) |ta><ta|,
///   1/2 {t^2 |1><1| + (1 - t^2)|0><0|} (x) |-ta><-ta|,
///   1/2 t e^{-2 a^2 (1 - t^2)} (|0><1| (x) |ta><-ta| + h.c.).
struct ChannelState {
  double alpha = 0.0;
  double t = 1.0;
  double vacuum_plus = 0.5;   // |0><0| (x) |ta><ta|
  double one_minus = 0.5;     // |1><1| (x) |-ta><-ta|
  double vacuum_minus = 0.0;  // |0><0| (x) |-ta><-ta|
  double coherence = 0.5;     // |0><1| (x) |ta><-ta| and its adjoint

  double beta() const { return t * alpha; }
  HybridOperator as_operator() const;
  /// The coherence terms are traceless on the discrete side.
  double trace() const { return vacuum_plus + one_minus + vacuum_minus; }
};

/// How the discrete index of a HybridOperator maps onto Fock modes.
struct DiscreteEmbedding {
  std::vector<int> mode_dims;                 // e.g. {2} single rail, {2,2} dual rail
  std::vector<std::vector<int>> occupations;  // one tuple per discrete index
};

DiscreteEmbedding single_rail_embedding(int mode_dim = 2);
/// Polarization qubit on two rails: index 0 = vacuum, 1 = |H> = |1,0>, 2 = |V> = |0,1>.
DiscreteEmbedding dual_rail_embedding(int mode_dim = 2);

/// Expand into the truncated Fock basis; TailTooLarge if `cutoff` cannot hold beta.
DensityMatrix materialize(const CoherentBasisOp& op, int cutoff);
DensityMatrix materialize(const HybridOperator& op, const DiscreteEmbedding& embed, int cutoff);
DensityMatrix materialize(const ChannelState& channel, int cutoff);

}  // namespace hytel
