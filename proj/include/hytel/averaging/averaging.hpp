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

#include <functional>
#include <vector>

#include "hytel/hybrid/hybrid_states.hpp"
#include "hytel/kernels/rows.hpp"
#include "hytel/teleport/direction.hpp"

namespace hytel {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached and thread-safe; n >= 1.
const GaussLegendre& gauss_legendre(int n);

/// Node counts for the Bloch-sphere rule: Gauss-Legendre in u = cos(theta),
/// uniform periodic in phi. Doubling both counts is the convergence test.
struct QuadratureSpec {
  int n_theta = 64;
  int n_phi = 64;
  double tolerance = 1e-9;
  int max_nodes = 4096;
};

struct AverageResult {
  double value = 0.0;
  int n_theta = 0;  // nodes of the accepted (finer) evaluation
  int n_phi = 0;
  double delta = 0.0;  // change from the previous refinement
  bool converged = false;
};

using Integrand = std::function<double(const QubitCoeffs&)>;

/// (1/4pi) sum over the fixed product rule.
double bloch_average_fixed(const Integrand& f, int n_theta, int n_phi);
/// Refines until doubling moves the result by less than spec.tolerance.
AverageResult bloch_average(const Integrand& f, const QuadratureSpec& spec = {});

/// Average of the closed-form per-input fidelity over the Bloch sphere via
/// the vectorized row kernels. Flags non-convergence instead of throwing.
AverageResult average_fidelity_certified(Direction d, double alpha, double r,
                                         const QuadratureSpec& spec = {},
                                         Variant v = Variant::Corrected,
                                         kernels::Isa isa = kernels::best_isa());

/// As above; NonConvergent if the certificate fails.
double average_fidelity(Direction d, double alpha, double r, const QuadratureSpec& spec = {},
                        Variant v = Variant::Corrected);

/// Fixed-rule kernel average, no refinement.
double average_fidelity_fixed(Direction d, double alpha, double r, int n_theta, int n_phi,
                              Variant v, kernels::Isa isa);

/// Average of the truncated-Fock per-input fidelity (alpha <= 3).
AverageResult average_fidelity_numeric(Direction d, double alpha, double r,
                                       const QuadratureSpec& spec = {});
/// Average of the truncated-Fock per-input accepted-outcome probability.
AverageResult average_success_numeric(Direction d, double alpha, double r,
                                      const QuadratureSpec& spec = {});

}  // namespace hytel
