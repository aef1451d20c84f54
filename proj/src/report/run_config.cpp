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

#include "nmrsep/run_config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nmrsep/errors.hpp"

namespace nmrsep {
namespace {

namespace fs = std::filesystem;

const std::set<std::string, std::less<>> kKnownKeys = {
    "n_spins",     "larmor", "temperature", "molecule_count", "circuit_path", "observable",
    "bipartition", "ball_radius", "seed",   "output_path"};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string strip_comment(std::string_view value) {
  return trim(value.substr(0, value.find('#')));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError("config key '" + std::string(key) + "': cannot parse '" +
                      std::string(text) + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw ConfigError("config key '" + std::string(key) + "': value must be finite");
    }
  }
  return value;
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_number<double>(key, token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

fs::path resolve(const fs::path& base_dir, const std::string& value) {
  fs::path p(value);
  return p.is_absolute() ? p : base_dir / p;
}

}  // namespace

std::string ObservableSpec::to_string() const {
  std::string s(1, axis_char(axis));
  if (spin) s += ":" + std::to_string(*spin);
  return s;
}

ComplexMatrix ObservableSpec::matrix(std::size_t n_spins) const {
  return spin ? spin_observable(n_spins, *spin, axis) : collective_observable(n_spins, axis);
}

ObservableSpec parse_observable(std::string_view text) {
  ObservableSpec spec;
  const auto colon = text.find(':');
  spec.axis = parse_axis(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    const std::string_view rest = text.substr(colon + 1);
    std::size_t spin = 0;
    const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), spin);
    if (rest.empty() || ec != std::errc() || end != rest.data() + rest.size() || spin == 0) {
      throw InvalidArgument("observable '" + std::string(text) + "': bad spin index");
    }
    spec.spin = spin;
  }
  return spec;
}

std::optional<Bipartition> RunConfig::cut() const {
  if (bipartition) return Bipartition::parse(*bipartition, n_spins);
  if (n_spins < 2) return std::nullopt;
  return Bipartition(n_spins, {1});
}

RunConfig parse_config(std::string_view text, const fs::path& base_dir) {
  boost::property_tree::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }

  std::map<std::string, std::string, std::less<>> values;
  for (const auto& [key, node] : tree) {
    if (!node.empty()) throw ConfigError("config sections are not supported ('[" + key + "]')");
    if (!kKnownKeys.contains(key)) throw ConfigError("unknown config key '" + key + "'");
    values[key] = strip_comment(node.data());
  }
  auto required = [&](std::string_view key) -> const std::string& {
    const auto it = values.find(key);
    if (it == values.end() || it->second.empty()) {
      throw ConfigError("missing config key '" + std::string(key) + "'");
    }
    return it->second;
  };
  auto optional = [&](std::string_view key) -> std::optional<std::string> {
    const auto it = values.find(key);
    if (it == values.end() || it->second.empty()) return std::nullopt;
    return it->second;
  };

  RunConfig cfg;
  cfg.n_spins = parse_number<std::size_t>("n_spins", required("n_spins"));
  if (cfg.n_spins < 1 || cfg.n_spins > tol::kMaxSpins) {
    throw ConfigError("n_spins must be in 1.." + std::to_string(tol::kMaxSpins));
  }
  cfg.larmor = parse_list("larmor", required("larmor"));
  if (cfg.larmor.size() != cfg.n_spins) {
    throw ConfigError("larmor lists " + std::to_string(cfg.larmor.size()) +
                      " frequencies for n_spins = " + std::to_string(cfg.n_spins));
  }
  cfg.temperature = parse_number<double>("temperature", required("temperature"));
  if (!(cfg.temperature > 0.0)) throw ConfigError("temperature must be positive");
  cfg.molecule_count = parse_number<double>("molecule_count", required("molecule_count"));
  if (!(cfg.molecule_count > 0.0)) throw ConfigError("molecule_count must be positive");

  if (auto v = optional("circuit_path")) {
    cfg.circuit_path = resolve(base_dir, *v);
    if (!fs::is_regular_file(*cfg.circuit_path)) {
      throw ConfigError("circuit file not found: " + cfg.circuit_path->string());
    }
  }
  if (auto v = optional("observable")) {
    try {
      cfg.observable = parse_observable(*v);
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
    if (cfg.observable.spin && *cfg.observable.spin > cfg.n_spins) {
      throw ConfigError("observable spin " + std::to_string(*cfg.observable.spin) +
                        " exceeds n_spins");
    }
  }
  if (auto v = optional("bipartition")) {
    cfg.bipartition = *v;
    try {
      static_cast<void>(cfg.cut());
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  }
  if (auto v = optional("ball_radius")) {
    cfg.ball_radius = parse_number<double>("ball_radius", *v);
    if (!(*cfg.ball_radius > 0.0)) throw ConfigError("ball_radius must be positive");
  }
  if (auto v = optional("seed")) cfg.seed = parse_number<std::uint64_t>("seed", *v);
  if (auto v = optional("output_path")) cfg.output_path = resolve(base_dir, *v);
  return cfg;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig load_config(const fs::path& path) {
  return parse_config(read_text_file(path), path.parent_path());
}

}  // namespace nmrsep
