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

#include "hytel/teleport/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>

#include "hytel/bell/bell_measurement.hpp"
#include "hytel/error.hpp"
#include "hytel/fock/measurement.hpp"
#include "hytel/loss/loss_channel.hpp"
#include "hytel/teleport/closed_form.hpp"
#include "result_util.hpp"

namespace hytel {

namespace {

constexpr std::array<BellOutcome, 5> kOutcomes{BellOutcome::B1, BellOutcome::B2, BellOutcome::B3,
                                               BellOutcome::B4, BellOutcome::Fail};

bool coherent_sender(Direction d) { return d == Direction::C2S || d == Direction::C2P; }

struct Setup {
  Direction dir;
  double alpha;
  double r;
  double t;
  int n;
  DensityMatrix channel_dm;  // discrete senders
  Ensemble channel_ens;      // coherent senders
  Eigen::MatrixXcd pair;     // n x 2: |t a>, |-t a>
  Eigen::MatrixXcd xc;       // pi phase shift
  Eigen::MatrixXcd zc;       // sign on |-t a>, identity on |t a>
};

Setup make_setup(Direction d, double alpha, double r) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  }
  if (alpha > 3.0) throw Error(ErrorCode::BackendOverflow, "numeric backend is limited to alpha <= 3");
  const LossParams p = LossParams::from_r(r);
  Setup s{d, alpha, r, p.t(), 0, {}, {}, {}, {}, {}};
  const double beta = s.t * alpha;
  s.n = coherent_sender(d) ? cutoff_for(std::max(alpha, std::numbers::sqrt2 * beta)) : cutoff_for(alpha);
  const bool polar = d == Direction::P2C || d == Direction::C2P;
  const int rail = d == Direction::S2C ? 3 : 2;
  const FockState pure = polar ? polarization_channel_pure(alpha, rail, s.n)
                               : hybrid_channel_pure(alpha, rail, s.n);
  std::vector<ModeIndex> modes;
  for (std::size_t m = 0; m < pure.space().num_modes(); ++m) modes.emplace_back(static_cast<int>(m));
  const DensityMatrix decayed = kraus_loss(DensityMatrix::pure(pure), p, modes);
  if (coherent_sender(d)) {
    s.channel_ens = Ensemble::from_density(decayed);
  } else {
    s.channel_dm = decayed;
  }
  s.pair.resize(s.n, 2);
  s.pair.col(0) = coherent_state(beta, s.n).amps();
  s.pair.col(1) = coherent_state(-beta, s.n).amps();
  s.xc = Eigen::MatrixXcd::Zero(s.n, s.n);
  for (int k = 0; k < s.n; ++k) s.xc(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  const Eigen::Matrix2cd gram = s.pair.adjoint() * s.pair;
  const Eigen::Vector2cd sign(1.0, -1.0);
  s.zc = s.pair * sign.asDiagonal() * gram.inverse() * s.pair.adjoint();
  return s;
}

Eigen::MatrixXcd sandwich(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& rho) {
  return u * rho * u.adjoint();
}

Eigen::MatrixXcd fix_coherent(const Setup& s, Eigen::MatrixXcd rho, Correction c) {
  if (c.x) rho = sandwich(s.xc, rho);
  if (c.z) rho = sandwich(s.zc, rho);
  return rho;
}

// Single rail: qubit on (0, 1) of a 2-level mode. Dual rail: H = |1,0> is
// flat index 2 and V = |0,1> is flat index 1 of a (2, 2) pair.
Eigen::MatrixXcd fix_discrete(Direction d, Eigen::MatrixXcd rho, Correction c) {
  const auto dim = rho.rows();
  const Eigen::Index h = d == Direction::C2S ? 0 : 2;
  const Eigen::Index v = 1;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  if (c.x) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Identity(dim, dim);
    x(h, h) = 0.0;
    x(v, v) = 0.0;
    x(h, v) = 1.0;
    x(v, h) = 1.0;
    u = x * u;
  }
  if (c.z) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Identity(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const bool v_photon = d == Direction::C2S ? i == 1 : (i % 2 == 1);
      if (v_photon) z(i, i) = -1.0;
    }
    u = z * u;
  }
  return sandwich(u, rho);
}

struct CoreOut {
  std::array<Eigen::MatrixXcd, 5> state;  // unnormalized, corrected
  std::array<double, 5> prob{};
};

FockState dual_rail_qubit(cplx a, cplx b) {
  const FockSpace rails({2, 2});
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(2) = a;
  v(1) = b;
  return FockState(rails, std::move(v));
}

// Bell vector on (input pair, channel pair) of dual-rail qubits.
FockState dual_rail_bell(BellOutcome k) {
  const Eigen::Matrix2d b = bell_coefficients(k);
  const FockSpace space({2, 2, 2, 2});
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  const std::array<std::array<int, 2>, 2> occ{{{1, 0}, {0, 1}}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::array<int, 4> o{occ[i][0], occ[i][1], occ[j][0], occ[j][1]};
      v(static_cast<Eigen::Index>(space.flat_index(o))) = b(i, j);
    }
  }
  return FockState(space, std::move(v));
}

CoreOut run_discrete_sender(const Setup& s, const Eigen::Vector2cd& in) {
  CoreOut out;
  const double in_norm = in.squaredNorm();
  double total = 0.0;
  if (s.dir == Direction::S2C) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(3);
    v.head(2) = in;
    const DensityMatrix joint =
        tensor(DensityMatrix::pure(FockState(FockSpace({3}), std::move(v))), s.channel_dm);
    for (int k = 0; k < 4; ++k) {
      const BsmOutcome o = project_single_rail_bell(joint, ModeIndex(0), ModeIndex(1), kOutcomes[k]);
      out.prob[k] = o.probability;
      out.state[k] = o.conditional ? fix_coherent(s, o.probability * o.conditional->mat(), o.correction)
                                   : Eigen::MatrixXcd::Zero(s.n, s.n);
      total += o.probability;
    }
  } else {
    const DensityMatrix joint = tensor(DensityMatrix::pure(dual_rail_qubit(in(0), in(1))), s.channel_dm);
    const std::array<ModeIndex, 1> keep{ModeIndex(4)};
    for (int k = 0; k < 4; ++k) {
      const VectorProjector proj{{ModeIndex(0), ModeIndex(1), ModeIndex(2), ModeIndex(3)},
                                 dual_rail_bell(kOutcomes[k])};
      const Projection pr = project(joint, proj);
      out.prob[k] = pr.probability;
      out.state[k] = pr.conditional
                         ? fix_coherent(s, pr.probability * partial_trace(*pr.conditional, keep).mat(),
                                        correction_for(kOutcomes[k]))
                         : Eigen::MatrixXcd::Zero(s.n, s.n);
      total += pr.probability;
    }
  }
  out.prob[4] = in_norm - total;
  out.state[4] = Eigen::MatrixXcd::Zero(s.n, s.n);
  return out;
}

CoreOut run_coherent_sender(const Setup& s, const Eigen::Vector2cd& in) {
  Ensemble input(FockSpace({s.n}));
  input.add(s.pair * in);
  const Ensemble joint = tensor(input, s.channel_ens);
  const int last = static_cast<int>(joint.space().num_modes()) - 1;
  const auto outcomes = bsm_coherent(joint, ModeIndex(0), ModeIndex(last));
  const Eigen::Index dim = s.dir == Direction::C2S ? 2 : 4;
  CoreOut out;
  for (int k = 0; k < 5; ++k) {
    const BsmOutcome& o = outcomes[static_cast<std::size_t>(k)];
    out.prob[k] = o.probability;
    if (!o.conditional) {
      out.state[k] = Eigen::MatrixXcd::Zero(dim, dim);
    } else if (o.kind == BellOutcome::Fail) {
      out.state[k] = o.probability * o.conditional->mat();
    } else {
      out.state[k] = fix_discrete(s.dir, o.probability * o.conditional->mat(), o.correction);
    }
  }
  return out;
}

CoreOut run_core(const Setup& s, const Eigen::Vector2cd& in) {
  return coherent_sender(s.dir) ? run_coherent_sender(s, in) : run_discrete_sender(s, in);
}

// Input coefficient vector for qubit q: as given for discrete senders, and
// rescaled so that pair * c is a unit vector for coherent senders.
Eigen::Vector2cd input_vector(const Setup& s, const QubitCoeffs& q) {
  Eigen::Vector2cd c(q.a(), q.b());
  if (coherent_sender(s.dir)) c /= (s.pair * c).norm();
  return c;
}

Eigen::VectorXcd target_vector(const Setup& s, const QubitCoeffs& q) {
  switch (s.dir) {
    case Direction::S2C:
    case Direction::P2C: return (s.pair * Eigen::Vector2cd(q.a(), q.b())).normalized();
    case Direction::C2S: return Eigen::Vector2cd(q.a(), q.b());
    case Direction::C2P: return dual_rail_qubit(q.a(), q.b()).amps();
  }
  return {};
}

TeleportResult assemble(const Setup& s, const QubitCoeffs& q, const CoreOut& core) {
  TeleportResult res;
  res.direction = s.dir;
  res.backend = Backend::Numeric;
  res.success_probability = success_prob(s.dir, s.alpha, s.r);
  const Eigen::VectorXcd target = target_vector(s, q);
  double total = 0.0;
  for (double p : core.prob) total += p;
  for (int k = 0; k < 5; ++k) {
    OutcomeRecord rec{kOutcomes[k], core.prob[k] / total, 0.0, detail::accepted_for(s.dir, kOutcomes[k])};
    const Eigen::MatrixXcd& m = core.state[k];
    const double tr = m.trace().real();
    if (kOutcomes[k] != BellOutcome::Fail && tr > 1e-300) {
      rec.fidelity = clamp_unit(target.dot(m * target).real() / tr);
    }
    res.breakdown.push_back(rec);
  }
  detail::finish(res);
  return res;
}

const std::array<Eigen::Vector2cd, 4>& basis_inputs() {
  static const std::array<Eigen::Vector2cd, 4> b{
      Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.0, 1.0),
      Eigen::Vector2cd(1.0, 1.0) / std::numbers::sqrt2,
      Eigen::Vector2cd(1.0, cplx(0.0, 1.0)) / std::numbers::sqrt2};
  return b;
}

// Weights w with c c^+ = sum_m w_m b_m b_m^+ over basis_inputs().
std::array<double, 4> basis_weights(const Eigen::Vector2cd& c) {
  const cplx r01 = c(0) * std::conj(c(1));
  const double wp = 2.0 * r01.real();
  const double wq = -2.0 * r01.imag();
  return {std::norm(c(0)) - 0.5 * (wp + wq), std::norm(c(1)) - 0.5 * (wp + wq), wp, wq};
}

// The channel does not depend on the input; keep the most recent ones.
std::shared_ptr<const Setup> cached_setup(Direction d, double alpha, double r) {
  using Key = std::tuple<int, double, double>;
  static std::mutex mu;
  static std::deque<std::pair<Key, std::shared_ptr<const Setup>>> cache;
  const Key key{static_cast<int>(d), alpha, r};
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [k, v] : cache) {
      if (k == key) return v;
    }
  }
  auto built = std::make_shared<const Setup>(make_setup(d, alpha, r));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace_back(key, built);
  if (cache.size() > 16) cache.pop_front();
  return built;
}

}  // namespace

TeleportResult teleport_numeric(Direction d, const QubitCoeffs& q, double alpha, double r) {
  const auto setup = cached_setup(d, alpha, r);
  const Setup& s = *setup;
  TeleportResult res = assemble(s, q, run_core(s, input_vector(s, q)));
  if (d == Direction::S2C) {
    // Detector-level accounting for the accepted pair.
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(3);
    v(0) = q.a();
    v(1) = q.b();
    const DensityMatrix joint =
        tensor(DensityMatrix::pure(FockState(FockSpace({3}), std::move(v))), s.channel_dm);
    double detected = 0.0;
    for (const auto& o : bsm_single_rail(joint, ModeIndex(0), ModeIndex(1))) {
      if (o.kind != BellOutcome::Fail) detected += o.probability;
    }
    res.input_success_probability = detected;
  }
  return res;
}

double dual_rail_oracle_c2p(const QubitCoeffs& q, double alpha, double r) {
  return teleport_numeric(Direction::C2P, q, alpha, r).fidelity;
}

double dual_rail_oracle_p2c(const QubitCoeffs& q, double alpha, double r) {
  return teleport_numeric(Direction::P2C, q, alpha, r).fidelity;
}

NumericProcess::NumericProcess(Direction d, double alpha, double r)
    : dir_(d), alpha_(alpha), r_(r), t_(0.0), cutoff_(0) {
  const auto setup = cached_setup(d, alpha, r);
  const Setup& s = *setup;
  t_ = s.t;
  cutoff_ = s.n;
  pair_ = s.pair;
  const auto& basis = basis_inputs();
  for (int m = 0; m < 4; ++m) {
    const CoreOut out = run_core(s, basis[static_cast<std::size_t>(m)]);
    for (int k = 0; k < 5; ++k) {
      resp_[k][m] = out.state[k];
      prob_[k][m] = out.prob[k];
    }
  }
}

TeleportResult NumericProcess::evaluate(const QubitCoeffs& q) const {
  Setup s{dir_, alpha_, r_, t_, cutoff_, {}, {}, pair_, {}, {}};
  const auto w = basis_weights(input_vector(s, q));
  CoreOut core;
  for (int k = 0; k < 5; ++k) {
    core.state[k] = w[0] * resp_[k][0] + w[1] * resp_[k][1] + w[2] * resp_[k][2] + w[3] * resp_[k][3];
    core.prob[k] = w[0] * prob_[k][0] + w[1] * prob_[k][1] + w[2] * prob_[k][2] + w[3] * prob_[k][3];
  }
  return assemble(s, q, core);
}

double NumericProcess::mixed_input_success() const {
  double p = 0.0;
  for (int k = 0; k < 5; ++k) {
    if (detail::accepted_for(dir_, kOutcomes[k])) p += 0.5 * (prob_[k][0] + prob_[k][1]);
  }
  return p;
}

double NumericProcess::mixed_input_fail() const { return 0.5 * (prob_[4][0] + prob_[4][1]); }

}  // namespace hytel
