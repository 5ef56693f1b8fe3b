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

#include <cstdlib>
#include <string>

#include "hytel/error.hpp"
#include "hytel/kernels/rows.hpp"
#include "rows_impl.hpp"

namespace hytel::kernels {

namespace detail {
#ifndef HYTEL_HAVE_AVX2
bool avx2_compiled() { return false; }
double row_sum_avx2(Formula f, const FormulaConsts& c, double p, double q, double s,
                    std::span<const double> cos_phi, std::span<const double> sin_phi) {
  return row_sum_scalar(f, c, p, q, s, cos_phi, sin_phi);
}
#endif
}  // namespace detail

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return detail::avx2_compiled() && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon: return detail::neon_compiled();
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (auto isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

Isa best_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("HYTEL_ISA")) {
      for (auto isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (to_string(isa) == env && isa_available(isa)) return isa;
      }
    }
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
  }();
  return chosen;
}

double row_sum(Isa isa, Formula f, const FormulaConsts& c, double p, double q, double s,
               std::span<const double> cos_phi, std::span<const double> sin_phi) {
  if (cos_phi.size() != sin_phi.size()) {
    throw Error(ErrorCode::ShapeMismatch, "cos/sin tables differ in length");
  }
  if (!isa_available(isa)) {
    throw Error(ErrorCode::InvalidArgument, "instruction set " + std::string(to_string(isa)) +
                                                " is not available");
  }
  switch (isa) {
    case Isa::Avx2: return detail::row_sum_avx2(f, c, p, q, s, cos_phi, sin_phi);
    case Isa::Neon: return detail::row_sum_neon(f, c, p, q, s, cos_phi, sin_phi);
    case Isa::Scalar: break;
  }
  return detail::row_sum_scalar(f, c, p, q, s, cos_phi, sin_phi);
}

}  // namespace hytel::kernels
