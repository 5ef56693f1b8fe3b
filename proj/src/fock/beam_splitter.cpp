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

#include "hytel/fock/beam_splitter.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "hytel/error.hpp"

namespace hytel {

BeamSplitterTable::BeamSplitterTable(int dim) : dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "beam splitter dimension");
  const auto d = static_cast<std::size_t>(dim);
  columns_.resize(d * d);
  columns_[0] = {1.0};
  // Build U|k,m> by applying the transformed creation operators one at a
  // time; every step maps a normalized vector to a normalized vector.
  for (int m = 1; m < dim; ++m) {
    const auto& old = columns_[static_cast<std::size_t>(m - 1)];
    const int n = m;
    std::vector<double> col(static_cast<std::size_t>(n + 1), 0.0);
    const double scale = 1.0 / std::sqrt(2.0 * m);
    for (int j = 0; j <= n; ++j) {
      double acc = 0.0;
      if (j >= 1) acc += std::sqrt(static_cast<double>(j)) * old[static_cast<std::size_t>(j - 1)];
      if (j <= n - 1) acc += std::sqrt(static_cast<double>(n - j)) * old[static_cast<std::size_t>(j)];
      col[static_cast<std::size_t>(j)] = acc * scale;
    }
    columns_[static_cast<std::size_t>(m)] = std::move(col);
  }
  for (int k = 1; k < dim; ++k) {
    for (int m = 0; m < dim; ++m) {
      const auto& old = columns_[static_cast<std::size_t>(k - 1) * d + static_cast<std::size_t>(m)];
      const int n = k + m;
      std::vector<double> col(static_cast<std::size_t>(n + 1), 0.0);
      const double scale = 1.0 / std::sqrt(2.0 * k);
      for (int j = 0; j <= n; ++j) {
        double acc = 0.0;
        if (j >= 1) acc += std::sqrt(static_cast<double>(j)) * old[static_cast<std::size_t>(j - 1)];
        if (j <= n - 1) acc -= std::sqrt(static_cast<double>(n - j)) * old[static_cast<std::size_t>(j)];
        col[static_cast<std::size_t>(j)] = acc * scale;
      }
      columns_[static_cast<std::size_t>(k) * d + static_cast<std::size_t>(m)] = std::move(col);
    }
  }
}

std::shared_ptr<const BeamSplitterTable> beam_splitter_table(int dim) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const BeamSplitterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dim);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const BeamSplitterTable>(dim);
  cache.emplace(dim, table);
  return table;
}

namespace {

struct PairLayout {
  int dim = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::vector<std::size_t> bases;  // flat indices with both modes empty
};

PairLayout pair_layout(const FockSpace& space, ModeIndex m1, ModeIndex m2) {
  if (m1 == m2) throw Error(ErrorCode::InvalidArgument, "beam splitter needs two distinct modes");
  const int d1 = space.dim(m1);
  const int d2 = space.dim(m2);
  if (d1 != d2) {
    throw Error(ErrorCode::CutoffMismatch,
                "beam splitter modes have dimensions " + std::to_string(d1) + " and " +
                    std::to_string(d2));
  }
  PairLayout p;
  p.dim = d1;
  p.s1 = space.stride(m1);
  p.s2 = space.stride(m2);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.occupation(i, m1) == 0 && space.occupation(i, m2) == 0) p.bases.push_back(i);
  }
  return p;
}

void apply_pair(const PairLayout& p, const BeamSplitterTable& table, const cplx* in, cplx* out,
                std::size_t in_stride, std::size_t out_stride) {
  const int dim = p.dim;
  for (std::size_t base : p.bases) {
    for (int k = 0; k < dim; ++k) {
      for (int m = 0; m < dim; ++m) {
        const cplx x = in[(base + static_cast<std::size_t>(k) * p.s1 +
                           static_cast<std::size_t>(m) * p.s2) *
                          in_stride];
        if (x == cplx(0.0, 0.0)) continue;
        const auto& col = table.column(k, m);
        const int n = k + m;
        const int jlo = n - dim + 1 > 0 ? n - dim + 1 : 0;
        const int jhi = n < dim - 1 ? n : dim - 1;
        for (int j = jlo; j <= jhi; ++j) {
          out[(base + static_cast<std::size_t>(j) * p.s1 +
               static_cast<std::size_t>(n - j) * p.s2) *
              out_stride] += x * col[static_cast<std::size_t>(j)];
        }
      }
    }
  }
}

Eigen::VectorXcd apply_vector(const PairLayout& p, const BeamSplitterTable& table,
                              const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  apply_pair(p, table, v.data(), out.data(), 1, 1);
  return out;
}

void check_leak(double before, double after, double tol) {
  const double leak = before - after;
  if (leak > tol) {
    throw Error(ErrorCode::TruncationLeakage,
                "beam splitter pushed " + std::to_string(leak) + " above the truncation");
  }
}

}  // namespace

FockState beam_splitter(const FockState& psi, ModeIndex m1, ModeIndex m2, double leak_tolerance) {
  const auto layout = pair_layout(psi.space(), m1, m2);
  const auto table = beam_splitter_table(layout.dim);
  Eigen::VectorXcd out = apply_vector(layout, *table, psi.amps());
  check_leak(psi.norm_squared(), out.squaredNorm(), leak_tolerance);
  return FockState(psi.space(), std::move(out));
}

DensityMatrix beam_splitter(const DensityMatrix& rho, ModeIndex m1, ModeIndex m2,
                            double leak_tolerance) {
  const auto layout = pair_layout(rho.space(), m1, m2);
  const auto table = beam_splitter_table(layout.dim);
  const auto n = static_cast<Eigen::Index>(rho.space().size());
  // U rho, column by column, then U (U rho)^+ and take the adjoint.
  Eigen::MatrixXcd left = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    apply_pair(layout, *table, rho.mat().col(c).data(), left.col(c).data(), 1, 1);
  }
  const Eigen::MatrixXcd left_adj = left.adjoint();
  Eigen::MatrixXcd both = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    apply_pair(layout, *table, left_adj.col(c).data(), both.col(c).data(), 1, 1);
  }
  DensityMatrix out(rho.space(), both.adjoint());
  check_leak(rho.trace().real(), out.trace().real(), leak_tolerance);
  return out;
}

Ensemble beam_splitter(const Ensemble& rho, ModeIndex m1, ModeIndex m2, double leak_tolerance) {
  const auto layout = pair_layout(rho.space(), m1, m2);
  const auto table = beam_splitter_table(layout.dim);
  Ensemble out(rho.space());
  double before = 0.0;
  double after = 0.0;
  for (const auto& v : rho.branches()) {
    before += v.squaredNorm();
    out.add(apply_vector(layout, *table, v));
    after += out.branches().back().squaredNorm();
  }
  check_leak(before, after, leak_tolerance);
  return out;
}

}  // namespace hytel
