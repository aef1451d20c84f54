// Copyright 2026 The nmrsep Authors
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

// nmrsep simulate --config run.ini [--output report.json] [--summary] [--ball-radius r]
// nmrsep sweep    --config run.ini --n 50 [--seed s] [--output ...] [--summary]
//
// Exit codes: 0 success, 1 usage/config/IO error, 2 numeric validation failure.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "nmrsep/errors.hpp"
#include "nmrsep/report.hpp"
#include "nmrsep/run_config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

struct CommonOptions {
  std::string config_path;
  std::optional<std::string> output;
  std::optional<double> ball_radius;
  bool summary = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Run configuration file")->required();
  cmd->add_option("--output", opts.output, "Report path (overrides output_path)");
  cmd->add_option("--ball-radius", opts.ball_radius,
                  "Frobenius radius around I/K to test against (overrides ball_radius)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--summary", opts.summary, "Print a short human-readable verdict");
}

nmrsep::RunConfig load(const CommonOptions& opts) {
  nmrsep::RunConfig cfg = nmrsep::load_config(opts.config_path);
  if (opts.output) cfg.output_path = *opts.output;
  if (opts.ball_radius) cfg.ball_radius = *opts.ball_radius;
  return cfg;
}

// Report goes to the output path when one is set; otherwise to stdout unless
// only the summary was asked for.
void emit(const nmrsep::Report& report, const nmrsep::RunConfig& cfg, bool summary) {
  const std::string text = nmrsep::render_report(report);
  if (cfg.output_path) {
    nmrsep::write_text_file(*cfg.output_path, text);
  } else if (!summary) {
    std::cout << text;
  }
  if (summary) std::cout << nmrsep::render_summary(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure-state vs density-matrix simulation of NMR ensemble computation"};
  app.require_subcommand(1);

  CommonOptions sim_opts;
  CLI::App* simulate = app.add_subcommand("simulate", "Run one circuit through both pathways");
  add_common(simulate, sim_opts);

  CommonOptions sweep_opts;
  std::size_t n_circuits = 0;
  std::optional<std::uint64_t> seed;
  CLI::App* sweep = app.add_subcommand("sweep", "Check pathway agreement on random circuits");
  add_common(sweep, sweep_opts);
  sweep->add_option("--n", n_circuits, "Number of random circuits")->required();
  sweep->add_option("--seed", seed, "RNG seed (overrides seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      const nmrsep::RunConfig cfg = load(sim_opts);
      emit(nmrsep::build_simulate_report(cfg), cfg, sim_opts.summary);
    } else {
      nmrsep::RunConfig cfg = load(sweep_opts);
      if (seed) cfg.seed = *seed;
      emit(nmrsep::build_sweep_report(cfg, n_circuits), cfg, sweep_opts.summary);
    }
  } catch (const nmrsep::ValidationError& e) {
    std::cerr << "nmrsep: numeric validation failed: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const nmrsep::ParseError& e) {
    std::cerr << "nmrsep: circuit parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "nmrsep: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
