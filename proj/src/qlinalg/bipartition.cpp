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

#include "nmrsep/qlinalg/bipartition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nmrsep/errors.hpp"
#include "nmrsep/tolerances.hpp"

namespace nmrsep {
namespace {

// offsets[l] = full-index bits contributed by local index l of `spins`.
std::vector<std::size_t> offsets_for(std::span<const std::size_t> spins, std::size_t n_spins) {
  const std::size_t count = spins.size();
  std::vector<std::size_t> offsets(std::size_t{1} << count, 0);
  for (std::size_t local = 0; local < offsets.size(); ++local) {
    std::size_t full = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if ((local >> (count - 1 - i)) & 1U) full |= std::size_t{1} << (n_spins - spins[i]);
    }
    offsets[local] = full;
  }
  return offsets;
}

std::vector<std::size_t> parse_side(std::string_view text, std::string_view whole) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || end == text.data() + pos) {
      throw InvalidArgument("bipartition '" + std::string(whole) + "': bad spin index");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
  }
  return out;
}

}  // namespace

Bipartition::Bipartition(std::size_t n_spins, std::vector<std::size_t> left_spins)
    : n_spins_(n_spins), left_(std::move(left_spins)) {
  if (n_spins_ < 2 || n_spins_ > tol::kMaxSpins) {
    throw InvalidArgument("bipartition needs 2.." + std::to_string(tol::kMaxSpins) +
                          " spins, got " + std::to_string(n_spins_));
  }
  std::sort(left_.begin(), left_.end());
  if (std::adjacent_find(left_.begin(), left_.end()) != left_.end()) {
    throw InvalidArgument("bipartition: duplicate spin index");
  }
  for (std::size_t s : left_) {
    if (s < 1 || s > n_spins_) {
      throw InvalidArgument("bipartition: spin " + std::to_string(s) + " outside 1.." +
                            std::to_string(n_spins_));
    }
  }
  for (std::size_t s = 1; s <= n_spins_; ++s) {
    if (!std::binary_search(left_.begin(), left_.end(), s)) right_.push_back(s);
  }
  if (left_.empty() || right_.empty()) {
    throw InvalidArgument("bipartition: both sides must be non-empty");
  }
  left_offset_ = offsets_for(left_, n_spins_);
  right_offset_ = offsets_for(right_, n_spins_);
}

Bipartition Bipartition::parse(std::string_view spec, std::size_t n_spins) {
  const std::size_t bar = spec.find('|');
  if (bar == std::string_view::npos || spec.find('|', bar + 1) != std::string_view::npos) {
    throw InvalidArgument("bipartition '" + std::string(spec) + "' must contain exactly one '|'");
  }
  std::vector<std::size_t> left = parse_side(spec.substr(0, bar), spec);
  std::vector<std::size_t> right = parse_side(spec.substr(bar + 1), spec);
  Bipartition part(n_spins, std::move(left));
  std::sort(right.begin(), right.end());
  if (right != part.right_) {
    throw InvalidArgument("bipartition '" + std::string(spec) +
                          "': right side is not the complement of the left side");
  }
  return part;
}

std::vector<Bipartition> Bipartition::all_cuts(std::size_t n_spins) {
  std::vector<Bipartition> cuts;
  if (n_spins < 2) return cuts;
  // Spin 1 fixed on the left; enumerate subsets of spins 2..N that leave the right non-empty.
  const std::size_t others = n_spins - 1;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << others); ++mask) {
    std::vector<std::size_t> left{1};
    for (std::size_t i = 0; i < others; ++i) {
      if ((mask >> i) & 1U) left.push_back(i + 2);
    }
    cuts.emplace_back(n_spins, std::move(left));
  }
  return cuts;
}

std::string Bipartition::to_string() const {
  auto join = [](std::span<const std::size_t> spins) {
    std::string s;
    for (std::size_t i = 0; i < spins.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(spins[i]);
    }
    return s;
  };
  return join(left_) + "|" + join(right_);
}

}  // namespace nmrsep
