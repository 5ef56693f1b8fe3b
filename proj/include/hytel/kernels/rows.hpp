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

#include <span>
#include <string_view>
#include <vector>

#include "hytel/kernels/formulas.hpp"

namespace hytel::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);
/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);
/// Fastest available; HYTEL_ISA=scalar|avx2|neon overrides when available.
Isa best_isa();
std::vector<Isa> available_isas();

/// One Bloch-sphere row at fixed theta: sum over j of
/// F(p, q, s cos_phi[j], s sin_phi[j]) with p = |a|^2, q = |b|^2, s = sin(theta)/2.
double row_sum(Isa isa, Formula f, const FormulaConsts& c, double p, double q, double s,
               std::span<const double> cos_phi, std::span<const double> sin_phi);

}  // namespace hytel::kernels
