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

// Report assembly for the `simulate` and `sweep` commands.
//
// A report is one JSON object with the top-level sections, in this order:
// config_echo, ensemble, pathways, entanglement, separability, sweep. A
// section that does not apply to the run is null. Reports carry no
// timestamp, so identical inputs give byte-identical output.

#ifndef NMRSEP_REPORT_HPP
#define NMRSEP_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include <json.hpp>

#include "nmrsep/circuit.hpp"
#include "nmrsep/run_config.hpp"

namespace nmrsep {

using Report = nlohmann::ordered_json;

inline constexpr std::size_t kMaxSweepDepth = 20;

/// Gate kinds uniform over all kinds valid for `n_spins` (two-spin kinds need
/// N >= 2), depth uniform in 1..max_depth, distinct uniform targets, angles
/// uniform in [0, 2 pi). The mapping from engine output to choices is fixed
/// here, so a seed gives the same circuits with any standard library.
Circuit random_circuit(std::mt19937_64& rng, std::size_t n_spins,
                       std::size_t max_depth = kMaxSweepDepth);

/// Full report for one circuit. Throws ConfigError if the config has no
/// circuit_path, ParseError for a bad circuit file, ValidationError on
/// numeric contract failures.
Report build_simulate_report(const RunConfig& config);

/// Runs `n_circuits` seeded random circuits through both pathways. The
/// pathway/entanglement/separability sections are filled from circuit_path
/// when the config has one. Throws ConfigError if the config has no seed.
Report build_sweep_report(const RunConfig& config, std::size_t n_circuits);

/// Pretty-printed JSON with a trailing newline.
std::string render_report(const Report& report);

/// Ten-line human-readable verdict.
std::string render_summary(const Report& report);

/// Writes `text` to `path`. Throws ConfigError naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace nmrsep

#endif  // NMRSEP_REPORT_HPP
