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

#include <immintrin.h>

#include "rows_impl.hpp"

namespace hytel::kernels::detail {

namespace {

struct V4 {
  __m256d v;
  V4(double x) : v(_mm256_set1_pd(x)) {}  // NOLINT: broadcast
  explicit V4(__m256d x) : v(x) {}
};

inline V4 operator+(V4 a, V4 b) { return V4(_mm256_add_pd(a.v, b.v)); }
inline V4 operator-(V4 a, V4 b) { return V4(_mm256_sub_pd(a.v, b.v)); }
inline V4 operator*(V4 a, V4 b) { return V4(_mm256_mul_pd(a.v, b.v)); }
inline V4 operator/(V4 a, V4 b) { return V4(_mm256_div_pd(a.v, b.v)); }

}  // namespace

bool avx2_compiled() { return true; }

double row_sum_avx2(Formula f, const FormulaConsts& c, double p, double q, double s,
                    std::span<const double> cos_phi, std::span<const double> sin_phi) {
  const std::size_t n = cos_phi.size();
  const V4 vp(p), vq(q), vs(s);
  V4 acc(0.0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const V4 x = vs * V4(_mm256_loadu_pd(cos_phi.data() + j));
    const V4 y = vs * V4(_mm256_loadu_pd(sin_phi.data() + j));
    acc = acc + fidelity<V4>(f, vp, vq, x, y, c);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc.v);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; j < n; ++j) total += fidelity<double>(f, p, q, s * cos_phi[j], s * sin_phi[j], c);
  return total;
}

}  // namespace hytel::kernels::detail
