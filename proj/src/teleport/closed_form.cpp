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

#include "hytel/teleport/closed_form.hpp"

#include <cmath>

#include "hytel/error.hpp"
#include "hytel/kernels/formulas.hpp"

namespace hytel {

namespace {

void check_params(double alpha, double r) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be non-negative");
  }
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1]");
}

kernels::Formula formula_for(Direction d, Variant v) {
  switch (d) {
    case Direction::S2C: return kernels::Formula::S2C;
    case Direction::C2S: return kernels::Formula::C2S;
    case Direction::C2P:
      return v == Variant::Printed ? kernels::Formula::C2PPrinted : kernels::Formula::C2PCorrected;
    case Direction::P2C:
      return v == Variant::Printed ? kernels::Formula::P2CPrinted : kernels::Formula::P2CCorrected;
  }
  throw Error(ErrorCode::UnsupportedDirection, "direction");
}

}  // namespace

double fidelity_closed_form(Direction d, const QubitCoeffs& q, double alpha, double r, Variant v) {
  check_params(alpha, r);
  const auto c = kernels::make_consts(alpha, r);
  const cplx ab = q.coherence();
  return kernels::fidelity<double>(formula_for(d, v), q.pa(), q.pb(), ab.real(), ab.imag(), c);
}

SuccessValue success_prob_detail(Direction d, double alpha, double r) {
  check_params(alpha, r);
  const double t2 = (1.0 - r) * (1.0 + r);
  const double x = 2.0 * t2 * alpha * alpha;  // 2 t^2 a^2
  switch (d) {
    case Direction::S2C: return {0.5, false};
    case Direction::C2S: return {-0.5 * std::expm1(-x), false};
    case Direction::P2C: return {0.5 * t2, false};
    case Direction::C2P: {
      if (x == 0.0) return {0.0, true};
      // Same value as (1 - g) atanh(g) / g with g = e^{-x}.
      const double g = std::exp(-x);
      const double one_minus_g = -std::expm1(-x);
      const double atanh_over_g =
          g < 1e-8 ? 1.0 + g * g / 3.0 : 0.5 * (std::log1p(g) - std::log(one_minus_g)) / g;
      return {one_minus_g * atanh_over_g, false};
    }
  }
  throw Error(ErrorCode::UnsupportedDirection, "direction");
}

double success_prob(Direction d, double alpha, double r) {
  return success_prob_detail(d, alpha, r).value;
}

double average_fidelity_closed(Direction d, double alpha, double r, Variant v) {
  check_params(alpha, r);
  const auto c = kernels::make_consts(alpha, r);
  switch (d) {
    case Direction::C2S: {
      const double base = v == Variant::Printed ? 2.0 / 3.0 : 0.5;
      return base + (c.t2 + 2.0 * c.d) / 6.0;
    }
    case Direction::C2P: return c.t2 * (2.0 + c.dp) / 3.0;
    default:
      throw Error(ErrorCode::UnsupportedDirection,
                  std::string("no closed-form average for ") + std::string(to_string(d)));
  }
}

}  // namespace hytel
