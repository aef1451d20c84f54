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

// Run configuration: a flat INI-style key = value file.
//
//   n_spins = 2
//   larmor = 1.0, 1.0           # one Larmor frequency per spin
//   temperature = 2e5
//   molecule_count = 1e20
//   circuit_path = bell.circ    # relative to the config file
//   observable = x              # x | y | z (total spin) or x:2 (spin 2 only)
//   bipartition = 1|2           # default: 1|2..N
//   ball_radius = 0.01          # optional
//   seed = 42                   # required by sweep
//   output_path = report.json   # optional, default stdout

#ifndef NMRSEP_RUN_CONFIG_HPP
#define NMRSEP_RUN_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmrsep/qlinalg/bipartition.hpp"
#include "nmrsep/qlinalg/complex_matrix.hpp"
#include "nmrsep/spin_system.hpp"

namespace nmrsep {

struct ObservableSpec {
  Axis axis = Axis::kX;
  std::optional<std::size_t> spin;  // empty: collective sum over all spins

  /// "x" or "x:2"
  std::string to_string() const;
  ComplexMatrix matrix(std::size_t n_spins) const;
};

/// Throws InvalidArgument on anything other than "x|y|z" optionally followed by ":<spin>".
ObservableSpec parse_observable(std::string_view text);

struct RunConfig {
  std::size_t n_spins = 0;
  std::vector<double> larmor;
  double temperature = 0.0;
  double molecule_count = 0.0;
  std::optional<std::filesystem::path> circuit_path;
  ObservableSpec observable;
  std::optional<std::string> bipartition;
  std::optional<double> ball_radius;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> output_path;

  /// The configured cut, or "1|2..N" when unset; empty for a single spin.
  std::optional<Bipartition> cut() const;
};

/// Parses config text. Relative paths resolve against `base_dir`. Throws
/// ConfigError on syntax errors, unknown or missing keys, bad values, or a
/// circuit_path that does not exist.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);

/// Reads and parses a config file. Throws ConfigError naming the path if it
/// cannot be read.
RunConfig load_config(const std::filesystem::path& path);

/// Reads a whole text file. Throws ConfigError naming the path.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace nmrsep

#endif  // NMRSEP_RUN_CONFIG_HPP
