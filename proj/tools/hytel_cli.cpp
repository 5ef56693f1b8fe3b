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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hytel/error.hpp"
#include "hytel/harness/point.hpp"
#include "hytel/harness/sweep.hpp"
#include "hytel/harness/verify.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

std::vector<hytel::Direction> parse_directions(const std::vector<std::string>& names) {
  std::vector<hytel::Direction> out;
  for (const auto& n : names) {
    const auto d = hytel::parse_direction(n);
    if (!d) throw hytel::Error(hytel::ErrorCode::InvalidArgument, "unknown direction '" + n + "'");
    out.push_back(*d);
  }
  return out;
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid teleportation simulator"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "average fidelity and success probability over an r grid");
  std::vector<std::string> sweep_dirs;
  std::vector<double> sweep_alphas;
  std::string preset;
  std::string backend = "analytic";
  std::string sweep_out;
  hytel::SweepConfig sc;
  sweep->add_option("--direction", sweep_dirs, "s2c, c2s, p2c, c2p")->delimiter(',');
  sweep->add_option("--alpha", sweep_alphas, "comma-separated amplitudes")->delimiter(',');
  sweep->add_option("--r-min", sc.r_min);
  sweep->add_option("--r-max", sc.r_max);
  sweep->add_option("--r-steps", sc.r_steps);
  sweep->add_option("--preset", preset, "fig1, fig2, fig3, fig4");
  sweep->add_option("--backend", backend, "analytic, numeric or both");
  sweep->add_option("--out", sweep_out, "CSV path (stdout if omitted)");
  sweep->add_option("--n-theta", sc.spec.n_theta);
  sweep->add_option("--n-phi", sc.spec.n_phi);
  sweep->add_option("--threads", sc.threads);

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check backends and published formulas");
  hytel::VerifyConfig vc;
  std::string verify_out;
  verify->add_option("--alpha", vc.alphas, "amplitudes for the numeric legs (<= 3)")->delimiter(',');
  verify->add_option("--r", vc.rs, "r values")->delimiter(',');
  verify->add_option("--n-theta", vc.spec.n_theta);
  verify->add_option("--n-phi", vc.spec.n_phi);
  verify->add_option("--bloch-points", vc.bloch_points, "per-input grid points per axis");
  verify->add_option("--out", verify_out, "report path (stdout if omitted)");

  // point
  auto* point = app.add_subcommand("point", "single input, JSON result");
  hytel::PointConfig pc;
  std::string point_dir = "s2c";
  std::string point_backend = "analytic";
  point->add_option("--direction", point_dir)->required();
  point->add_option("--theta", pc.theta);
  point->add_option("--phi", pc.phi);
  point->add_option("--alpha", pc.alpha);
  point->add_option("--r", pc.r);
  point->add_option("--backend", point_backend, "analytic or numeric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*sweep) {
      hytel::SweepConfig cfg = preset.empty() ? sc : hytel::preset_config(preset);
      if (!preset.empty()) {
        cfg.spec = sc.spec;
        cfg.threads = sc.threads;
        if (sweep->count("--r-min")) cfg.r_min = sc.r_min;
        if (sweep->count("--r-max")) cfg.r_max = sc.r_max;
        if (sweep->count("--r-steps")) cfg.r_steps = sc.r_steps;
      }
      if (!sweep_dirs.empty()) cfg.directions = parse_directions(sweep_dirs);
      if (!sweep_alphas.empty()) cfg.alphas = sweep_alphas;
      const auto policy = hytel::parse_backend_policy(backend);
      if (!policy) throw hytel::Error(hytel::ErrorCode::InvalidArgument, "unknown backend '" + backend + "'");
      cfg.backend = *policy;
      hytel::validate(cfg);
      const auto rows = hytel::run_sweep(cfg);
      if (!write_text(sweep_out, hytel::to_csv(rows))) {
        std::cerr << "cannot write " << sweep_out << "\n";
        return kExitValidation;
      }
      return 0;
    }
    if (*verify) {
      const auto checks = hytel::run_verify(vc);
      if (!write_text(verify_out, hytel::format_report(checks))) {
        std::cerr << "cannot write " << verify_out << "\n";
        return kExitValidation;
      }
      return hytel::any_failure(checks) ? kExitVerification : 0;
    }
    if (*point) {
      const auto d = hytel::parse_direction(point_dir);
      if (!d) throw hytel::Error(hytel::ErrorCode::InvalidArgument, "unknown direction '" + point_dir + "'");
      pc.direction = *d;
      if (point_backend == "analytic") {
        pc.backend = hytel::Backend::Analytic;
      } else if (point_backend == "numeric") {
        pc.backend = hytel::Backend::Numeric;
      } else {
        throw hytel::Error(hytel::ErrorCode::InvalidArgument, "unknown backend '" + point_backend + "'");
      }
      std::cout << hytel::run_point(pc).dump(2) << "\n";
      return 0;
    }
  } catch (const hytel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
