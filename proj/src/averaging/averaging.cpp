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

#include "hytel/averaging/averaging.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hytel/error.hpp"
#include "hytel/teleport/numeric.hpp"

namespace hytel {

namespace {

void check_spec(const QuadratureSpec& spec) {
  if (spec.n_theta < 8 || spec.n_phi < 8) {
    throw Error(ErrorCode::InvalidArgument, "quadrature needs at least 8 nodes per axis");
  }
  if (!(spec.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
}

struct PhiTable {
  std::vector<double> cos_phi;
  std::vector<double> sin_phi;
};

PhiTable phi_table(int n_phi) {
  PhiTable t;
  t.cos_phi.resize(static_cast<std::size_t>(n_phi));
  t.sin_phi.resize(static_cast<std::size_t>(n_phi));
  for (int j = 0; j < n_phi; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / n_phi;
    t.cos_phi[static_cast<std::size_t>(j)] = std::cos(phi);
    t.sin_phi[static_cast<std::size_t>(j)] = std::sin(phi);
  }
  return t;
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

template <class Eval>
AverageResult refine(const QuadratureSpec& spec, Eval eval) {
  check_spec(spec);
  int nt = spec.n_theta;
  int np = spec.n_phi;
  double prev = eval(nt, np);
  AverageResult res;
  while (2 * nt <= spec.max_nodes && 2 * np <= spec.max_nodes) {
    nt *= 2;
    np *= 2;
    const double next = eval(nt, np);
    res.value = next;
    res.n_theta = nt;
    res.n_phi = np;
    res.delta = std::abs(next - prev);
    if (res.delta < spec.tolerance) {
      res.converged = true;
      return res;
    }
    prev = next;
  }
  if (res.n_theta == 0) {
    res.value = prev;
    res.n_theta = nt;
    res.n_phi = np;
    res.delta = std::numeric_limits<double>::infinity();
  }
  return res;
}

}  // namespace

double bloch_average_fixed(const Integrand& f, int n_theta, int n_phi) {
  const GaussLegendre& gl = gauss_legendre(n_theta);
  double total = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double u = gl.nodes[static_cast<std::size_t>(i)];
    const double theta = std::acos(u);
    double row = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      row += f(QubitCoeffs::from_bloch(theta, phi));
    }
    total += gl.weights[static_cast<std::size_t>(i)] * row;
  }
  return total / (2.0 * n_phi);
}

AverageResult bloch_average(const Integrand& f, const QuadratureSpec& spec) {
  return refine(spec, [&](int nt, int np) { return bloch_average_fixed(f, nt, np); });
}

double average_fidelity_fixed(Direction d, double alpha, double r, int n_theta, int n_phi,
                              Variant v, kernels::Isa isa) {
  if (!(alpha >= 0.0) || !(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha >= 0 and r in [0, 1] required");
  }
  const auto consts = kernels::make_consts(alpha, r);
  const auto formula = formula_for(d, v);
  const GaussLegendre& gl = gauss_legendre(n_theta);
  const PhiTable phi = phi_table(n_phi);
  double total = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double u = gl.nodes[static_cast<std::size_t>(i)];
    const double p = 0.5 * (1.0 + u);
    const double q = 0.5 * (1.0 - u);
    const double s = 0.5 * std::sqrt((1.0 - u) * (1.0 + u));
    total += gl.weights[static_cast<std::size_t>(i)] *
             kernels::row_sum(isa, formula, consts, p, q, s, phi.cos_phi, phi.sin_phi);
  }
  return total / (2.0 * n_phi);
}

AverageResult average_fidelity_certified(Direction d, double alpha, double r,
                                         const QuadratureSpec& spec, Variant v, kernels::Isa isa) {
  return refine(spec, [&](int nt, int np) {
    return average_fidelity_fixed(d, alpha, r, nt, np, v, isa);
  });
}

double average_fidelity(Direction d, double alpha, double r, const QuadratureSpec& spec, Variant v) {
  const AverageResult res = average_fidelity_certified(d, alpha, r, spec, v);
  if (!res.converged) {
    throw Error(ErrorCode::NonConvergent, "quadrature change " + std::to_string(res.delta) +
                                              " at " + std::to_string(res.n_theta) + " nodes");
  }
  return res.value;
}

AverageResult average_fidelity_numeric(Direction d, double alpha, double r,
                                       const QuadratureSpec& spec) {
  const NumericProcess process(d, alpha, r);
  return bloch_average([&](const QubitCoeffs& q) { return process.fidelity(q); }, spec);
}

AverageResult average_success_numeric(Direction d, double alpha, double r,
                                      const QuadratureSpec& spec) {
  const NumericProcess process(d, alpha, r);
  return bloch_average(
      [&](const QubitCoeffs& q) { return process.evaluate(q).input_success_probability; }, spec);
}

}  // namespace hytel
