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

#include "rows_impl.hpp"

namespace hytel::kernels::detail {

double row_sum_scalar(Formula f, const FormulaConsts& c, double p, double q, double s,
                      std::span<const double> cos_phi, std::span<const double> sin_phi) {
  double acc = 0.0;
  for (std::size_t j = 0; j < cos_phi.size(); ++j) {
    acc += fidelity<double>(f, p, q, s * cos_phi[j], s * sin_phi[j], c);
  }
  return acc;
}

}  // namespace hytel::kernels::detail
