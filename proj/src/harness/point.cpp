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

#include "hytel/harness/point.hpp"

#include <cmath>
#include <string>

#include "hytel/teleport/closed_form.hpp"
#include "hytel/teleport/teleportation.hpp"

namespace hytel {

nlohmann::json run_point(const PointConfig& cfg) {
  const QubitCoeffs q = QubitCoeffs::from_bloch(cfg.theta, cfg.phi);
  const TeleportResult res = cfg.backend == Backend::Analytic
                                 ? teleport(cfg.direction, q, cfg.alpha, cfg.r)
                                 : teleport_numeric(cfg.direction, q, cfg.alpha, cfg.r);
  nlohmann::json j;
  j["direction"] = std::string(to_string(cfg.direction));
  j["theta"] = cfg.theta;
  j["phi"] = cfg.phi;
  j["alpha"] = cfg.alpha;
  j["r"] = cfg.r;
  j["t"] = std::sqrt((1.0 - cfg.r) * (1.0 + cfg.r));
  j["backend"] = std::string(to_string(res.backend));
  j["fidelity"] = res.fidelity;
  j["accepted_fidelity"] = res.accepted_fidelity;
  j["success_probability"] = res.success_probability;
  j["input_success_probability"] = res.input_success_probability;
  j["fidelity_closed_printed"] =
      fidelity_closed_form(cfg.direction, q, cfg.alpha, cfg.r, Variant::Printed);
  j["fidelity_closed_corrected"] =
      fidelity_closed_form(cfg.direction, q, cfg.alpha, cfg.r, Variant::Corrected);
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& o : res.breakdown) {
    outcomes.push_back({{"kind", std::string(to_string(o.kind))},
                        {"probability", o.probability},
                        {"fidelity", o.fidelity},
                        {"accepted", o.accepted}});
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

}  // namespace hytel
