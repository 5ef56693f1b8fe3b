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

#include "hytel/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "hytel/error.hpp"
#include "hytel/teleport/closed_form.hpp"
#include "hytel/teleport/numeric.hpp"

namespace hytel {

std::string_view to_string(BackendPolicy b) {
  switch (b) {
    case BackendPolicy::Analytic: return "analytic";
    case BackendPolicy::Numeric: return "numeric";
    case BackendPolicy::Both: return "both";
  }
  return "?";
}

std::optional<BackendPolicy> parse_backend_policy(std::string_view s) {
  for (auto b : {BackendPolicy::Analytic, BackendPolicy::Numeric, BackendPolicy::Both}) {
    if (s == to_string(b)) return b;
  }
  return std::nullopt;
}

SweepConfig preset_config(std::string_view name) {
  SweepConfig cfg;
  cfg.alphas = {0.5, 1.0, 2.0, 10.0};
  if (name == "fig1") {
    cfg.directions = {Direction::S2C, Direction::C2S};
  } else if (name == "fig2") {
    cfg.directions = {Direction::C2S};
  } else if (name == "fig3" || name == "fig4") {
    cfg.directions = {Direction::S2C, Direction::C2S, Direction::P2C, Direction::C2P};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "'");
  }
  return cfg;
}

void validate(const SweepConfig& cfg) {
  if (cfg.directions.empty()) throw Error(ErrorCode::InvalidArgument, "no direction given");
  if (cfg.alphas.empty()) throw Error(ErrorCode::InvalidArgument, "no alpha given");
  for (double a : cfg.alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  }
  if (!(cfg.r_min >= 0.0 && cfg.r_max < 1.0 && cfg.r_min <= cfg.r_max)) {
    throw Error(ErrorCode::InvalidArgument, "r grid must satisfy 0 <= r-min <= r-max < 1");
  }
  if (cfg.r_steps < 2) throw Error(ErrorCode::InvalidArgument, "r-steps must be at least 2");
  if (cfg.spec.n_theta < 8 || cfg.spec.n_phi < 8) {
    throw Error(ErrorCode::InvalidArgument, "n-theta and n-phi must be at least 8");
  }
  if (cfg.threads < 1) throw Error(ErrorCode::InvalidArgument, "threads must be at least 1");
}

std::vector<double> r_grid(const SweepConfig& cfg) {
  std::vector<double> rs(static_cast<std::size_t>(cfg.r_steps));
  const double step = (cfg.r_max - cfg.r_min) / (cfg.r_steps - 1);
  for (int i = 0; i < cfg.r_steps; ++i) rs[static_cast<std::size_t>(i)] = cfg.r_min + i * step;
  rs.back() = cfg.r_max;
  return rs;
}

namespace {

void add_flag(std::string& flags, std::string_view f) {
  if (!flags.empty()) flags += ';';
  flags += f;
}

struct NumericPoint {
  double fidelity;
  double success;
  bool converged;
};

NumericPoint numeric_point(Direction d, double alpha, double r, const QuadratureSpec& spec) {
  const NumericProcess process(d, alpha, r);
  const AverageResult f =
      bloch_average([&](const QubitCoeffs& q) { return process.fidelity(q); }, spec);
  double success;
  bool converged = f.converged;
  if (d == Direction::C2P) {
    const AverageResult s = bloch_average(
        [&](const QubitCoeffs& q) { return process.evaluate(q).input_success_probability; }, spec);
    success = s.value;
    converged = converged && s.converged;
  } else {
    success = process.mixed_input_success();
  }
  return {f.value, success, converged};
}

}  // namespace

SweepRecord evaluate_point(Direction d, double alpha, double r, const SweepConfig& cfg) {
  SweepRecord rec;
  rec.direction = d;
  rec.alpha = alpha;
  rec.r = r;
  rec.t = std::sqrt((1.0 - r) * (1.0 + r));
  std::string flags;
  if (d == Direction::C2S || d == Direction::C2P) {
    rec.avg_fidelity_closed_printed = average_fidelity_closed(d, alpha, r, Variant::Printed);
    rec.avg_fidelity_closed_corrected = average_fidelity_closed(d, alpha, r, Variant::Corrected);
  }
  const bool numeric_ok = alpha <= 3.0;
  const bool want_numeric = cfg.backend != BackendPolicy::Analytic;
  const bool want_analytic = cfg.backend != BackendPolicy::Numeric || !numeric_ok;
  if (want_numeric && !numeric_ok) add_flag(flags, "routed-analytic");

  double analytic_f = 0.0;
  double analytic_p = 0.0;
  if (want_analytic || (want_numeric && numeric_ok && cfg.backend == BackendPolicy::Both)) {
    const AverageResult avg = average_fidelity_certified(d, alpha, r, cfg.spec, Variant::Corrected);
    if (!avg.converged) add_flag(flags, "nonconvergent");
    analytic_f = avg.value;
    const SuccessValue sv = success_prob_detail(d, alpha, r);
    if (sv.limit) add_flag(flags, "limit");
    analytic_p = sv.value;
  }
  if (want_numeric && numeric_ok) {
    const NumericPoint np = numeric_point(d, alpha, r, cfg.spec);
    if (!np.converged) add_flag(flags, "nonconvergent-numeric");
    if (cfg.backend == BackendPolicy::Both) {
      rec.backend = "analytic+numeric";
      rec.avg_fidelity = analytic_f;
      rec.success_probability = analytic_p;
      if (std::abs(np.fidelity - analytic_f) > 1e-8 || std::abs(np.success - analytic_p) > 1e-8) {
        add_flag(flags, "backend-mismatch");
      }
    } else {
      rec.backend = "numeric";
      rec.avg_fidelity = np.fidelity;
      rec.success_probability = np.success;
    }
  } else {
    rec.backend = "analytic";
    rec.avg_fidelity = analytic_f;
    rec.success_probability = analytic_p;
  }
  rec.convergence_flag = flags.empty() ? "ok" : flags;
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  struct Job {
    Direction d;
    double alpha;
    double r;
  };
  std::vector<Direction> dirs = cfg.directions;
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  std::vector<double> alphas = cfg.alphas;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::vector<Job> jobs;
  for (auto d : dirs) {
    for (double a : alphas) {
      for (double r : r_grid(cfg)) jobs.push_back({d, a, r});
    }
  }
  std::vector<SweepRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      try {
        out[i] = evaluate_point(jobs[i].d, jobs[i].alpha, jobs[i].r, cfg);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  const int n = std::max(1, std::min<int>(cfg.threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string format_number(std::optional<double> v) {
  if (!v) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", *v);
  return buf;
}

std::string csv_header() {
  return "direction,alpha,r,t,avg_fidelity,avg_fidelity_closed_printed,"
         "avg_fidelity_closed_corrected,success_probability,backend,convergence_flag";
}

std::string to_csv(const std::vector<SweepRecord>& rows) {
  std::string s = csv_header() + "\n";
  for (const auto& r : rows) {
    s += std::string(to_string(r.direction)) + ',' + format_number(r.alpha) + ',' +
         format_number(r.r) + ',' + format_number(r.t) + ',' + format_number(r.avg_fidelity) + ',' +
         format_number(r.avg_fidelity_closed_printed) + ',' +
         format_number(r.avg_fidelity_closed_corrected) + ',' +
         format_number(r.success_probability) + ',' + r.backend + ',' + r.convergence_flag + '\n';
  }
  return s;
}

}  // namespace hytel
