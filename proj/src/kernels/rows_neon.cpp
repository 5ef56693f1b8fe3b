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

#if defined(__ARM_NEON) && defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace hytel::kernels::detail {

#if defined(__ARM_NEON) && defined(__aarch64__)

namespace {

struct V2 {
  float64x2_t v;
  V2(double x) : v(vdupq_n_f64(x)) {}  // NOLINT: broadcast
  explicit V2(float64x2_t x) : v(x) {}
};

inline V2 operator+(V2 a, V2 b) { return V2(vaddq_f64(a.v, b.v)); }
inline V2 operator-(V2 a, V2 b) { return V2(vsubq_f64(a.v, b.v)); }
inline V2 operator*(V2 a, V2 b) { return V2(vmulq_f64(a.v, b.v)); }
inline V2 operator/(V2 a, V2 b) { return V2(vdivq_f64(a.v, b.v)); }

}  // namespace

bool neon_compiled() { return true; }

double row_sum_neon(Formula f, const FormulaConsts& c, double p, double q, double s,
                    std::span<const double> cos_phi, std::span<const double> sin_phi) {
  const std::size_t n = cos_phi.size();
  const V2 vp(p), vq(q), vs(s);
  V2 acc(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const V2 x = vs * V2(vld1q_f64(cos_phi.data() + j));
    const V2 y = vs * V2(vld1q_f64(sin_phi.data() + j));
    acc = acc + fidelity<V2>(f, vp, vq, x, y, c);
  }
  double total = vgetq_lane_f64(acc.v, 0) + vgetq_lane_f64(acc.v, 1);
  for (; j < n; ++j) total += fidelity<double>(f, p, q, s * cos_phi[j], s * sin_phi[j], c);
  return total;
}

#else

bool neon_compiled() { return false; }

double row_sum_neon(Formula f, const FormulaConsts& c, double p, double q, double s,
                    std::span<const double> cos_phi, std::span<const double> sin_phi) {
  return row_sum_scalar(f, c, p, q, s, cos_phi, sin_phi);
}

#endif

}  // namespace hytel::kernels::detail
