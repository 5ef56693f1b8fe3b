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

#include "hytel/fock/measurement.hpp"

#include <cmath>
#include <utility>

#include "hytel/error.hpp"

namespace hytel {

namespace {

// Factorization of the flat index into (index over `modes`, index over the
// remaining modes in their original order).
struct Split {
  FockSpace sub;
  std::size_t rest_size = 1;
  std::vector<std::size_t> sub_idx;
  std::vector<std::size_t> rest_idx;
};

Split split(const FockSpace& space, std::span<const ModeIndex> modes) {
  std::vector<bool> chosen(space.num_modes(), false);
  for (auto m : modes) {
    space.check_mode(m);
    if (chosen[static_cast<std::size_t>(m.value)]) {
      throw Error(ErrorCode::InvalidArgument, "mode listed twice");
    }
    chosen[static_cast<std::size_t>(m.value)] = true;
  }
  Split s;
  s.sub = space.sub_space(modes);
  std::vector<ModeIndex> rest;
  for (std::size_t i = 0; i < space.num_modes(); ++i) {
    if (!chosen[i]) rest.emplace_back(static_cast<int>(i));
  }
  const FockSpace rest_space = space.sub_space(rest);
  s.rest_size = rest_space.size();
  s.sub_idx.resize(space.size());
  s.rest_idx.resize(space.size());
  std::vector<int> occ_sub(modes.size());
  std::vector<int> occ_rest(rest.size());
  for (std::size_t f = 0; f < space.size(); ++f) {
    for (std::size_t k = 0; k < modes.size(); ++k) occ_sub[k] = space.occupation(f, modes[k]);
    for (std::size_t k = 0; k < rest.size(); ++k) occ_rest[k] = space.occupation(f, rest[k]);
    s.sub_idx[f] = s.sub.flat_index(occ_sub);
    s.rest_idx[f] = rest_space.flat_index(occ_rest);
  }
  return s;
}

Eigen::MatrixXcd gather(const Split& s, const Eigen::VectorXcd& v) {
  Eigen::MatrixXcd x(static_cast<Eigen::Index>(s.sub.size()), static_cast<Eigen::Index>(s.rest_size));
  for (std::size_t f = 0; f < s.sub_idx.size(); ++f) {
    x(static_cast<Eigen::Index>(s.sub_idx[f]), static_cast<Eigen::Index>(s.rest_idx[f])) =
        v(static_cast<Eigen::Index>(f));
  }
  return x;
}

Eigen::VectorXcd scatter(const Split& s, const Eigen::MatrixXcd& x) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.sub_idx.size()));
  for (std::size_t f = 0; f < s.sub_idx.size(); ++f) {
    v(static_cast<Eigen::Index>(f)) =
        x(static_cast<Eigen::Index>(s.sub_idx[f]), static_cast<Eigen::Index>(s.rest_idx[f]));
  }
  return v;
}

std::vector<char> pattern_mask(const FockSpace& space, const PatternProjector& p) {
  for (auto m : p.modes) space.check_mode(m);
  std::vector<char> mask(space.size(), 0);
  std::vector<int> occ(p.modes.size());
  for (std::size_t f = 0; f < space.size(); ++f) {
    for (std::size_t k = 0; k < p.modes.size(); ++k) occ[k] = space.occupation(f, p.modes[k]);
    mask[f] = p.accept(occ) ? 1 : 0;
  }
  return mask;
}

Eigen::MatrixXcd rank_one(const FockSpace& space, const VectorProjector& p) {
  const FockSpace sub = space.sub_space(p.modes);
  if (!(sub == p.vector.space())) {
    throw Error(ErrorCode::ShapeMismatch, "projector vector does not match its modes");
  }
  const Eigen::VectorXcd w = p.vector.amps().normalized();
  return w * w.adjoint();
}

// Applies a projector to a batch of vectors (columns) sharing one space.
class ProjectorAction {
 public:
  ProjectorAction(const FockSpace& space, const Projector& projector) {
    if (const auto* pat = std::get_if<PatternProjector>(&projector)) {
      mask_ = pattern_mask(space, *pat);
    } else {
      const auto& vp = std::get<VectorProjector>(projector);
      split_ = split(space, vp.modes);
      op_ = rank_one(space, vp);
    }
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    if (!mask_.empty()) {
      Eigen::VectorXcd out = v;
      for (std::size_t f = 0; f < mask_.size(); ++f) {
        if (!mask_[f]) out(static_cast<Eigen::Index>(f)) = 0.0;
      }
      return out;
    }
    return scatter(split_, op_ * gather(split_, v));
  }

 private:
  std::vector<char> mask_;
  Split split_;
  Eigen::MatrixXcd op_;
};

}  // namespace

PatternProjector pattern_projector(std::vector<ModeIndex> modes, std::vector<int> pattern) {
  if (modes.size() != pattern.size()) {
    throw Error(ErrorCode::InvalidArgument, "pattern length does not match modes");
  }
  return PatternProjector{std::move(modes), [pattern](std::span<const int> occ) {
                            for (std::size_t i = 0; i < pattern.size(); ++i) {
                              if (occ[i] != pattern[i]) return false;
                            }
                            return true;
                          }};
}

Projection project(const DensityMatrix& rho, const Projector& projector, double zero_floor) {
  const ProjectorAction action(rho.space(), projector);
  const auto n = static_cast<Eigen::Index>(rho.space().size());
  Eigen::MatrixXcd left(n, n);
  for (Eigen::Index c = 0; c < n; ++c) left.col(c) = action.apply(rho.mat().col(c));
  const Eigen::MatrixXcd left_adj = left.adjoint();
  Eigen::MatrixXcd both(n, n);
  for (Eigen::Index c = 0; c < n; ++c) both.col(c) = action.apply(left_adj.col(c));
  both.adjointInPlace();
  Projection out;
  const double p = both.trace().real();
  if (p <= zero_floor) return out;
  out.probability = p;
  out.conditional = DensityMatrix(rho.space(), both / p);
  return out;
}

EnsembleProjection project(const Ensemble& rho, const Projector& projector) {
  const ProjectorAction action(rho.space(), projector);
  EnsembleProjection out{0.0, Ensemble(rho.space())};
  for (const auto& v : rho.branches()) {
    out.unnormalized.add(action.apply(v));
    out.probability += out.unnormalized.branches().back().squaredNorm();
  }
  return out;
}

FockState project_unnormalized(const FockState& psi, const Projector& projector) {
  const ProjectorAction action(psi.space(), projector);
  return FockState(psi.space(), action.apply(psi.amps()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const ModeIndex> keep) {
  const Split s = split(rho.space(), keep);
  // Bucket flat indices by the traced-out index.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> buckets(s.rest_size);
  for (std::size_t f = 0; f < s.sub_idx.size(); ++f) {
    buckets[s.rest_idx[f]].emplace_back(s.sub_idx[f], f);
  }
  const auto d = static_cast<Eigen::Index>(s.sub.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& b : buckets) {
    for (const auto& [i, fi] : b) {
      for (const auto& [j, fj] : b) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            rho.mat()(static_cast<Eigen::Index>(fi), static_cast<Eigen::Index>(fj));
      }
    }
  }
  return DensityMatrix(s.sub, std::move(out));
}

DensityMatrix partial_trace(const FockState& psi, std::span<const ModeIndex> keep) {
  const Split s = split(psi.space(), keep);
  const Eigen::MatrixXcd x = gather(s, psi.amps());
  return DensityMatrix(s.sub, x * x.adjoint());
}

DensityMatrix partial_trace(const Ensemble& rho, std::span<const ModeIndex> keep) {
  const Split s = split(rho.space(), keep);
  const auto d = static_cast<Eigen::Index>(s.sub.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& v : rho.branches()) {
    const Eigen::MatrixXcd x = gather(s, v);
    out.noalias() += x * x.adjoint();
  }
  return DensityMatrix(s.sub, std::move(out));
}

double fidelity(const FockState& target, const DensityMatrix& rho) {
  if (!(target.space() == rho.space())) {
    throw Error(ErrorCode::ShapeMismatch, "fidelity: target and state live in different spaces");
  }
  const cplx f = target.amps().dot(rho.mat() * target.amps());
  return f.real();
}

Eigen::VectorXcd apply_local(const FockSpace& space, const Eigen::VectorXcd& v,
                             std::span<const ModeIndex> modes, const Eigen::MatrixXcd& op) {
  const Split s = split(space, modes);
  if (op.rows() != static_cast<Eigen::Index>(s.sub.size()) || op.cols() != op.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "local operator shape");
  }
  return scatter(s, op * gather(s, v));
}

DensityMatrix apply_local(const DensityMatrix& rho, std::span<const ModeIndex> modes,
                          const Eigen::MatrixXcd& op) {
  const Split s = split(rho.space(), modes);
  if (op.rows() != static_cast<Eigen::Index>(s.sub.size()) || op.cols() != op.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "local operator shape");
  }
  const auto n = static_cast<Eigen::Index>(rho.space().size());
  Eigen::MatrixXcd left(n, n);
  for (Eigen::Index c = 0; c < n; ++c) left.col(c) = scatter(s, op * gather(s, rho.mat().col(c)));
  const Eigen::MatrixXcd left_adj = left.adjoint();
  Eigen::MatrixXcd both(n, n);
  for (Eigen::Index c = 0; c < n; ++c) both.col(c) = scatter(s, op * gather(s, left_adj.col(c)));
  return DensityMatrix(rho.space(), both.adjoint());
}

DensityMatrix swap_modes(const DensityMatrix& rho, ModeIndex m1, ModeIndex m2) {
  const FockSpace& space = rho.space();
  if (space.dim(m1) != space.dim(m2)) throw Error(ErrorCode::CutoffMismatch, "swap_modes");
  std::vector<std::size_t> perm(space.size());
  std::vector<int> occ(space.num_modes());
  for (std::size_t f = 0; f < space.size(); ++f) {
    for (std::size_t k = 0; k < occ.size(); ++k) occ[k] = space.occupation(f, ModeIndex(static_cast<int>(k)));
    std::swap(occ[static_cast<std::size_t>(m1.value)], occ[static_cast<std::size_t>(m2.value)]);
    perm[f] = space.flat_index(occ);
  }
  const auto n = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]),
          static_cast<Eigen::Index>(perm[static_cast<std::size_t>(j)])) = rho.mat()(i, j);
    }
  }
  return DensityMatrix(space, std::move(out));
}

}  // namespace hytel
