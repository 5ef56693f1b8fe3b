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

#include "hytel/teleport/teleportation.hpp"

#include <cmath>
#include <string>

#include "hytel/error.hpp"
#include "hytel/fock/measurement.hpp"
#include "hytel/loss/loss_channel.hpp"
#include "hytel/teleport/closed_form.hpp"
#include "result_util.hpp"

namespace hytel {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::S2C: return "s2c";
    case Direction::C2S: return "c2s";
    case Direction::P2C: return "p2c";
    case Direction::C2P: return "c2p";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view s) {
  for (auto d : kAllDirections) {
    const std::string_view name = to_string(d);
    if (s.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char c = static_cast<char>(s[i] >= 'A' && s[i] <= 'Z' ? s[i] - 'A' + 'a' : s[i]);
      same = same && c == name[i];
    }
    if (same) return d;
  }
  return std::nullopt;
}

std::string_view to_string(Backend b) { return b == Backend::Analytic ? "analytic" : "numeric"; }

namespace {

void check_params(double alpha, double r) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  }
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1)");
}

Eigen::Matrix2cd coherent_fix(const Eigen::Matrix2cd& c, Correction fix) {
  Eigen::Matrix2cd out = c;
  if (fix.x) {
    Eigen::Matrix2cd p;
    p << 0.0, 1.0, 1.0, 0.0;
    out = p * out * p;
  }
  if (fix.z) {
    const Eigen::Vector2cd s(1.0, -1.0);
    out = s.asDiagonal() * out * s.asDiagonal();
  }
  return out;
}

// Discrete receiver with the qubit on indices (offset, offset + 1).
Eigen::MatrixXcd discrete_fix(const Eigen::MatrixXcd& rho, Correction fix, int offset) {
  const auto d = rho.rows();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  if (fix.x) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Identity(d, d);
    x(offset, offset) = 0.0;
    x(offset + 1, offset + 1) = 0.0;
    x(offset, offset + 1) = 1.0;
    x(offset + 1, offset) = 1.0;
    u = x * u;
  }
  if (fix.z) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Identity(d, d);
    z(offset + 1, offset + 1) = -1.0;
    u = z * u;
  }
  return u * rho * u.adjoint();
}

TeleportResult discrete_sender(Direction d, const QubitCoeffs& q, double alpha, double r,
                               const HybridOperator& channel, int offset) {
  const LossParams p = LossParams::from_r(r);
  const CoherentBasisOp target = target_coherent_qubit(q, alpha, p.t());
  TeleportResult res;
  res.direction = d;
  res.backend = Backend::Analytic;
  res.success_probability = success_prob(d, alpha, r);
  for (const auto& o : bsm_discrete_analytic(q, channel, offset)) {
    OutcomeRecord rec{o.kind, o.probability, 0.0, detail::accepted_for(d, o.kind)};
    if (o.conditional && o.kind != BellOutcome::Fail) {
      const CoherentBasisOp fixed =
          CoherentBasisOp(o.conditional->beta(), coherent_fix(o.conditional->coeffs(), o.correction))
              .normalized();
      rec.fidelity = clamp_unit(overlap(target, fixed).real());
    }
    res.breakdown.push_back(rec);
  }
  detail::finish(res);
  return res;
}

TeleportResult coherent_sender(Direction d, const QubitCoeffs& q, double alpha, double r,
                               const HybridOperator& channel, int offset) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(channel.discrete_dim());
  psi(offset) = q.a();
  psi(offset + 1) = q.b();
  TeleportResult res;
  res.direction = d;
  res.backend = Backend::Analytic;
  res.success_probability = success_prob(d, alpha, r);
  for (const auto& o : bsm_coherent_analytic(q, channel)) {
    OutcomeRecord rec{o.kind, o.probability, 0.0, detail::accepted_for(d, o.kind)};
    if (o.conditional && o.kind != BellOutcome::Fail) {
      const Eigen::MatrixXcd fixed = discrete_fix(*o.conditional, o.correction, offset);
      rec.fidelity = clamp_unit(psi.dot(fixed * psi).real());
    }
    res.breakdown.push_back(rec);
  }
  detail::finish(res);
  return res;
}

}  // namespace

TeleportResult teleport_s2c(const QubitCoeffs& q, double alpha, double r) {
  check_params(alpha, r);
  const auto channel = decohere_hybrid(alpha, LossParams::from_r(r)).as_operator();
  return discrete_sender(Direction::S2C, q, alpha, r, channel, 0);
}

TeleportResult teleport_p2c(const QubitCoeffs& q, double alpha, double r) {
  check_params(alpha, r);
  const auto channel = decohere_polarization_hybrid(alpha, LossParams::from_r(r));
  return discrete_sender(Direction::P2C, q, alpha, r, channel, 1);
}

TeleportResult teleport_c2s(const QubitCoeffs& q, double alpha, double r) {
  check_params(alpha, r);
  const auto channel = decohere_hybrid(alpha, LossParams::from_r(r)).as_operator();
  return coherent_sender(Direction::C2S, q, alpha, r, channel, 0);
}

TeleportResult teleport_c2p(const QubitCoeffs& q, double alpha, double r) {
  check_params(alpha, r);
  const auto channel = decohere_polarization_hybrid(alpha, LossParams::from_r(r));
  return coherent_sender(Direction::C2P, q, alpha, r, channel, 1);
}

TeleportResult teleport(Direction d, const QubitCoeffs& q, double alpha, double r) {
  switch (d) {
    case Direction::S2C: return teleport_s2c(q, alpha, r);
    case Direction::C2S: return teleport_c2s(q, alpha, r);
    case Direction::P2C: return teleport_p2c(q, alpha, r);
    case Direction::C2P: return teleport_c2p(q, alpha, r);
  }
  throw Error(ErrorCode::UnsupportedDirection, "direction");
}

}  // namespace hytel
