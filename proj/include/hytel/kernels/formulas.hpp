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

#include <cmath>

namespace hytel::kernels {

/// Per-(alpha, r) constants shared by every Bloch point.
struct FormulaConsts {
  double t2 = 1.0;    // t^2
  double loss = 0.0;  // 1 - t^2
  double g = 1.0;     // e^{-2 t^2 a^2}
  double d = 1.0;     // t e^{-2 a^2 (1 - t^2)}
  double h = 1.0;     // t e^{-2 a^2}
  double dp = 1.0;    // e^{-2 a^2 (1 - t^2)}
  double e2 = 1.0;    // e^{-2 a^2}
};

inline FormulaConsts make_consts(double alpha, double r) {
  FormulaConsts c;
  const double a2 = alpha * alpha;
  c.loss = r * r;
  c.t2 = (1.0 - r) * (1.0 + r);
  const double t = std::sqrt(c.t2);
  c.g = std::exp(-2.0 * c.t2 * a2);
  c.dp = std::exp(-2.0 * a2 * c.loss);
  c.d = t * c.dp;
  c.e2 = std::exp(-2.0 * a2);
  c.h = t * c.e2;
  return c;
}

enum class Formula { S2C, C2S, C2PPrinted, C2PCorrected, P2CPrinted, P2CCorrected };

// Per-input fidelities in the real variables p = |a|^2, q = |b|^2,
// x = Re(a b^*), y = Im(a b^*). V is double or a SIMD lane wrapper; the
// anonymous namespace keeps each translation unit's instantiations apart.
namespace {

template <class V>
V fid_s2c(V p, V q, V x, V y, const FormulaConsts& c) {
  const V one(1.0), two(2.0);
  const V g(c.g), g2(c.g * c.g), t2(c.t2), loss(c.loss), d(c.d), h(c.h);
  const V gx = g * x;
  const V x2 = x * x, y2 = y * y;
  const V n2 = one / (one + two * gx);
  const V m = one / ((two - t2) * p + t2 * q + two * h * x);
  const V num = p * (p + g2 * q + two * gx) + (loss * p + t2 * q) * (g2 * p + q + two * gx) +
                two * d * (gx + g2 * (x2 - y2) + x2 + y2);
  return n2 * m * num;
}

template <class V>
V fid_c2s(V p, V q, V, V, const FormulaConsts& c) {
  const V mid(c.loss + 2.0 * c.d);
  return p * p + mid * p * q + V(c.t2) * q * q;
}

template <class V>
V fid_c2p(V p, V q, V, V, const FormulaConsts& c, double cross) {
  return V(c.t2) * (p * p + q * q + V(cross * c.dp) * p * q);
}

template <class V>
V fid_p2c(V p, V q, V x, V y, const FormulaConsts& c, bool corrected) {
  const V one(1.0), two(2.0);
  const V g(c.g), g2(c.g * c.g), dp(c.dp), e2(c.e2);
  const V gx = g * x;
  const V x2 = x * x, y2 = y * y;
  const V n2 = one / (one + two * gx);
  const V s = one / (one + two * e2 * x);
  const V cross = corrected ? gx + g2 * (x2 - y2) + x2 + y2 : gx + x2 - y2 + g2 * (x2 + y2);
  const V num = p * (p + g2 * q + two * gx) + q * (g2 * p + q + two * gx) + two * dp * cross;
  return n2 * s * num;
}

template <class V>
V fidelity(Formula f, V p, V q, V x, V y, const FormulaConsts& c) {
  switch (f) {
    case Formula::S2C: return fid_s2c(p, q, x, y, c);
    case Formula::C2S: return fid_c2s(p, q, x, y, c);
    case Formula::C2PPrinted: return fid_c2p(p, q, x, y, c, 1.0);
    case Formula::C2PCorrected: return fid_c2p(p, q, x, y, c, 2.0);
    case Formula::P2CPrinted: return fid_p2c(p, q, x, y, c, false);
    case Formula::P2CCorrected: return fid_p2c(p, q, x, y, c, true);
  }
  return V(0.0);
}

}  // namespace

}  // namespace hytel::kernels
