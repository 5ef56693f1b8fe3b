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

#include "hytel/bell/bell_measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hytel/error.hpp"
#include "hytel/fock/beam_splitter.hpp"
#include "hytel/fock/measurement.hpp"

namespace hytel {

std::string_view to_string(BellOutcome k) {
  switch (k) {
    case BellOutcome::B1: return "B1";
    case BellOutcome::B2: return "B2";
    case BellOutcome::B3: return "B3";
    case BellOutcome::B4: return "B4";
    case BellOutcome::Fail: return "FAIL";
  }
  return "?";
}

Correction correction_for(BellOutcome k) {
  switch (k) {
    case BellOutcome::B2: return {false, true};
    case BellOutcome::B3: return {true, false};
    case BellOutcome::B4: return {true, true};
    default: return {};
  }
}

Eigen::Matrix2d bell_coefficients(BellOutcome k) {
  const double h = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  switch (k) {
    case BellOutcome::B1: m << h, 0.0, 0.0, h; break;
    case BellOutcome::B2: m << h, 0.0, 0.0, -h; break;
    case BellOutcome::B3: m << 0.0, h, h, 0.0; break;
    case BellOutcome::B4: m << 0.0, h, -h, 0.0; break;
    case BellOutcome::Fail: throw Error(ErrorCode::InvalidArgument, "Fail is not a Bell state");
  }
  return m;
}

FockState single_rail_bell_state(BellOutcome k, int dim) {
  if (dim < 2) throw Error(ErrorCode::InvalidArgument, "single-rail modes need dimension >= 2");
  const Eigen::Matrix2d b = bell_coefficients(k);
  const FockSpace space({dim, dim});
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.size()));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::array<int, 2> occ{i, j};
      v(static_cast<Eigen::Index>(space.flat_index(occ))) = b(i, j);
    }
  }
  return FockState(space, std::move(v));
}

namespace {

std::vector<ModeIndex> remaining_modes(const FockSpace& space, std::initializer_list<ModeIndex> skip) {
  std::vector<ModeIndex> keep;
  for (std::size_t i = 0; i < space.num_modes(); ++i) {
    const ModeIndex m(static_cast<int>(i));
    bool drop = false;
    for (auto s : skip) drop = drop || s == m;
    if (!drop) keep.push_back(m);
  }
  return keep;
}

void check_single_rail(const DensityMatrix& rho, ModeIndex m_in, ModeIndex m_ch) {
  const FockSpace& space = rho.space();
  space.check_mode(m_in);
  space.check_mode(m_ch);
  if (space.dim(m_in) < 3 || space.dim(m_ch) < 3) {
    throw Error(ErrorCode::InvalidArgument, "single-rail Bell measurement needs dimension >= 3");
  }
  double outside = 0.0;
  for (std::size_t f = 0; f < space.size(); ++f) {
    if (space.occupation(f, m_in) > 1 || space.occupation(f, m_ch) > 1) {
      outside += std::abs(rho.mat()(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(f)));
    }
  }
  if (outside > kTailTolerance) {
    throw Error(ErrorCode::ModeNotSingleRail,
                "population " + std::to_string(outside) + " above one photon");
  }
}

template <class Joint>
BsmOutcome outcome_from(const Joint& after, const Projector& p, std::span<const ModeIndex> keep,
                        BellOutcome kind) {
  BsmOutcome out;
  out.kind = kind;
  out.correction = correction_for(kind);
  if constexpr (std::is_same_v<Joint, DensityMatrix>) {
    Projection pr = project(after, p);
    out.probability = pr.probability;
    if (pr.conditional) out.conditional = partial_trace(*pr.conditional, keep);
  } else {
    EnsembleProjection pr = project(after, p);
    out.probability = pr.probability;
    if (pr.probability > 1e-300) {
      DensityMatrix reduced = partial_trace(pr.unnormalized, keep);
      reduced.mat() /= pr.probability;
      out.conditional = std::move(reduced);
    }
  }
  return out;
}

PatternProjector coherent_pattern(ModeIndex c, ModeIndex c2, BellOutcome k) {
  std::function<bool(std::span<const int>)> accept;
  switch (k) {
    case BellOutcome::B1:
      accept = [](std::span<const int> n) { return n[1] == 0 && n[0] >= 2 && n[0] % 2 == 0; };
      break;
    case BellOutcome::B2:
      accept = [](std::span<const int> n) { return n[1] == 0 && n[0] % 2 == 1; };
      break;
    case BellOutcome::B3:
      accept = [](std::span<const int> n) { return n[0] == 0 && n[1] >= 2 && n[1] % 2 == 0; };
      break;
    case BellOutcome::B4:
      accept = [](std::span<const int> n) { return n[0] == 0 && n[1] % 2 == 1; };
      break;
    case BellOutcome::Fail:
      accept = [](std::span<const int> n) { return n[0] == 0 && n[1] == 0; };
      break;
  }
  return PatternProjector{{c, c2}, std::move(accept)};
}

void check_numeric_dims(const FockSpace& space, ModeIndex c, ModeIndex c2) {
  space.check_mode(c);
  space.check_mode(c2);
  if (space.dim(c) > numeric_dim_limit() || space.dim(c2) > numeric_dim_limit()) {
    throw Error(ErrorCode::BackendOverflow, "numeric backend is limited to alpha <= 3");
  }
}

template <class Joint>
std::vector<BsmOutcome> bsm_coherent_impl(const Joint& joint, ModeIndex c, ModeIndex c2) {
  check_numeric_dims(joint.space(), c, c2);
  const Joint after = beam_splitter(joint, c, c2);
  const auto keep = remaining_modes(joint.space(), {c, c2});
  std::vector<BsmOutcome> out;
  double total = 0.0;
  for (auto k : {BellOutcome::B1, BellOutcome::B2, BellOutcome::B3, BellOutcome::B4,
                 BellOutcome::Fail}) {
    out.push_back(outcome_from(after, coherent_pattern(c, c2, k), keep, k));
    total += out.back().probability;
  }
  double tr;
  if constexpr (std::is_same_v<Joint, DensityMatrix>) {
    tr = after.trace().real();
  } else {
    tr = after.trace();
  }
  if (std::abs(tr - total) > 1e-9) {
    throw Error(ErrorCode::BasisMismatch, "photons in both output modes: state leaves the coherent span");
  }
  return out;
}

}  // namespace

std::vector<BsmOutcome> bsm_single_rail(const DensityMatrix& joint, ModeIndex m_in, ModeIndex m_ch) {
  check_single_rail(joint, m_in, m_ch);
  const DensityMatrix after = beam_splitter(joint, m_in, m_ch);
  const auto keep = remaining_modes(joint.space(), {m_in, m_ch});
  std::vector<BsmOutcome> out;
  out.push_back(outcome_from(after, pattern_projector({m_in, m_ch}, {1, 0}), keep, BellOutcome::B3));
  out.push_back(outcome_from(after, pattern_projector({m_in, m_ch}, {0, 1}), keep, BellOutcome::B4));
  const PatternProjector fail{{m_in, m_ch}, [](std::span<const int> n) { return n[0] + n[1] != 1; }};
  out.push_back(outcome_from(after, fail, keep, BellOutcome::Fail));
  return out;
}

BsmOutcome project_single_rail_bell(const DensityMatrix& joint, ModeIndex m_in, ModeIndex m_ch,
                                    BellOutcome k) {
  check_single_rail(joint, m_in, m_ch);
  const int dim = joint.space().dim(m_in);
  const FockState bell = beam_splitter(single_rail_bell_state(k, dim), ModeIndex(0), ModeIndex(1));
  const DensityMatrix after = beam_splitter(joint, m_in, m_ch);
  const auto keep = remaining_modes(joint.space(), {m_in, m_ch});
  return outcome_from(after, VectorProjector{{m_in, m_ch}, bell}, keep, k);
}

std::vector<CoherentBsmOutcome> bsm_discrete_analytic(const QubitCoeffs& q,
                                                      const HybridOperator& channel, int offset) {
  if (offset < 0 || offset + 2 > channel.discrete_dim()) {
    throw Error(ErrorCode::ModeOutOfRange, "qubit offset outside the channel's discrete basis");
  }
  const Eigen::Vector2cd psi(q.a(), q.b());
  std::vector<CoherentBsmOutcome> out;
  double total = 0.0;
  for (auto k : {BellOutcome::B1, BellOutcome::B2, BellOutcome::B3, BellOutcome::B4}) {
    const Eigen::Matrix2d b = bell_coefficients(k);
    const Eigen::Vector2cd w = b.transpose().cast<cplx>() * psi;  // w_j = sum_i B_ij psi_i
    Eigen::Matrix2cd c = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < 2; ++j) {
      for (int jp = 0; jp < 2; ++jp) {
        const cplx wj = w(j) * std::conj(w(jp));
        for (int kk = 0; kk < 2; ++kk) {
          for (int l = 0; l < 2; ++l) c(kk, l) += wj * channel.at(offset + j, offset + jp, kk, l);
        }
      }
    }
    CoherentBsmOutcome o;
    o.kind = k;
    o.correction = correction_for(k);
    const CoherentBasisOp op(channel.beta(), c);
    o.probability = op.trace().real();
    if (o.probability > 1e-300) o.conditional = op.normalized();
    total += o.probability;
    out.push_back(std::move(o));
  }
  CoherentBsmOutcome fail;
  fail.probability = std::max(0.0, channel.trace().real() - total);
  out.push_back(std::move(fail));
  return out;
}

std::array<CoherentBellState, 4> coherent_bell_states(double alpha, double t) {
  const double beta = t * alpha;
  if (!(beta > 0.0)) throw Error(ErrorCode::DegenerateBasis, "coherent Bell states need t alpha > 0");
  const double g2 = std::exp(-4.0 * beta * beta);
  const double np = 1.0 / std::sqrt(2.0 + 2.0 * g2);
  const double nm = 1.0 / std::sqrt(2.0 - 2.0 * g2);
  std::array<CoherentBellState, 4> out;
  out[0] = {BellOutcome::B1, np, (Eigen::Matrix2d() << np, 0.0, 0.0, np).finished()};
  out[1] = {BellOutcome::B2, nm, (Eigen::Matrix2d() << nm, 0.0, 0.0, -nm).finished()};
  out[2] = {BellOutcome::B3, np, (Eigen::Matrix2d() << 0.0, np, np, 0.0).finished()};
  out[3] = {BellOutcome::B4, nm, (Eigen::Matrix2d() << 0.0, nm, -nm, 0.0).finished()};
  return out;
}

int numeric_dim_limit() { return cutoff_for(3.0 * std::numbers::sqrt2); }

std::vector<BsmOutcome> bsm_coherent(const DensityMatrix& joint, ModeIndex c, ModeIndex c2) {
  return bsm_coherent_impl(joint, c, c2);
}

std::vector<BsmOutcome> bsm_coherent(const Ensemble& joint, ModeIndex c, ModeIndex c2) {
  return bsm_coherent_impl(joint, c, c2);
}

std::vector<DiscreteBsmOutcome> bsm_coherent_analytic(const QubitCoeffs& q,
                                                      const HybridOperator& channel) {
  const double beta = channel.beta();
  const double n = target_normalization(q, beta);
  const Eigen::Vector2cd in(n * q.a(), n * q.b());
  // After the beam splitter every term collapses onto one common vector per
  // outcome; these are its squared norms.
  const double e = std::exp(-2.0 * beta * beta);
  const double x = 2.0 * beta * beta;
  const double even = e * (std::cosh(x) - 1.0);
  const double odd = e * std::sinh(x);
  const int d = channel.discrete_dim();
  std::vector<DiscreteBsmOutcome> out;
  for (auto k : {BellOutcome::B1, BellOutcome::B2, BellOutcome::B3, BellOutcome::B4,
                 BellOutcome::Fail}) {
    Eigen::Vector2cd amp = Eigen::Vector2cd::Zero();  // indexed by the channel's basis label
    double weight = 0.0;
    for (int kin = 0; kin < 2; ++kin) {
      for (int kc = 0; kc < 2; ++kc) {
        const double sign = kc == 0 ? 1.0 : -1.0;
        double f = 0.0;
        switch (k) {
          case BellOutcome::B1: f = kin == kc ? 1.0 : 0.0; break;
          case BellOutcome::B2: f = kin == kc ? sign : 0.0; break;
          case BellOutcome::B3: f = kin != kc ? 1.0 : 0.0; break;
          case BellOutcome::B4: f = kin != kc ? sign : 0.0; break;
          case BellOutcome::Fail: f = 1.0; break;
        }
        amp(kc) += in(kin) * f;
      }
    }
    switch (k) {
      case BellOutcome::B1:
      case BellOutcome::B3: weight = even; break;
      case BellOutcome::B2:
      case BellOutcome::B4: weight = odd; break;
      case BellOutcome::Fail: weight = e; break;
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        cplx acc = 0.0;
        for (int kk = 0; kk < 2; ++kk) {
          for (int l = 0; l < 2; ++l) acc += channel.at(i, j, kk, l) * amp(kk) * std::conj(amp(l));
        }
        rho(i, j) = weight * acc;
      }
    }
    DiscreteBsmOutcome o;
    o.kind = k;
    o.correction = correction_for(k);
    o.probability = rho.trace().real();
    if (o.probability > 1e-300) o.conditional = rho / o.probability;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace hytel
