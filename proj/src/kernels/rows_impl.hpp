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

#include "hytel/kernels/formulas.hpp"

namespace hytel::kernels::detail {

double row_sum_scalar(Formula f, const FormulaConsts& c, double p, double q, double s,
                      std::span<const double> cos_phi, std::span<const double> sin_phi);
double row_sum_avx2(Formula f, const FormulaConsts& c, double p, double q, double s,
                    std::span<const double> cos_phi, std::span<const double> sin_phi);
double row_sum_neon(Formula f, const FormulaConsts& c, double p, double q, double s,
                    std::span<const double> cos_phi, std::span<const double> sin_phi);

bool avx2_compiled();
bool neon_compiled();

}  // namespace hytel::kernels::detail
