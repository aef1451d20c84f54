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

#ifndef NMRSEP_QLINALG_BIPARTITION_HPP
#define NMRSEP_QLINALG_BIPARTITION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmrsep {

enum class Side { kLeft, kRight };

/// A cut of spins {1..N} into two non-empty complementary sets.
///
/// Spin indices are 1-based. Spin 1 is the most significant bit of a basis
/// index. Within each side, spins are kept in ascending order and the first
/// one is the most significant bit of the side's local index.
class Bipartition {
 public:
  /// `left_spins` in any order; the right side is the complement.
  /// Throws InvalidArgument if either side would be empty, or on
  /// duplicate or out-of-range indices.
  Bipartition(std::size_t n_spins, std::vector<std::size_t> left_spins);

  /// Parses "1|2", "1,3|2" or "1 3 | 2". Both sides must be listed and together
  /// cover 1..n_spins exactly.
  static Bipartition parse(std::string_view spec, std::size_t n_spins);

  /// Every distinct cut once (spin 1 always on the left): 2^(N-1) - 1 cuts.
  static std::vector<Bipartition> all_cuts(std::size_t n_spins);

  std::size_t n_spins() const noexcept { return n_spins_; }
  std::span<const std::size_t> spins(Side side) const noexcept {
    return side == Side::kLeft ? left_ : right_;
  }
  std::span<const std::size_t> left() const noexcept { return left_; }
  std::span<const std::size_t> right() const noexcept { return right_; }

  std::size_t dim(Side side) const noexcept {
    return std::size_t{1} << spins(side).size();
  }
  std::size_t full_dim() const noexcept { return std::size_t{1} << n_spins_; }

  /// Full basis index with the given local left and right indices.
  std::size_t compose(std::size_t left_index, std::size_t right_index) const {
    return left_offset_[left_index] | right_offset_[right_index];
  }

  /// "1,3|2"
  std::string to_string() const;

  friend bool operator==(const Bipartition& a, const Bipartition& b) {
    return a.n_spins_ == b.n_spins_ && a.left_ == b.left_;
  }

 private:
  std::size_t n_spins_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_offset_;
  std::vector<std::size_t> right_offset_;
};

}  // namespace nmrsep

#endif  // NMRSEP_QLINALG_BIPARTITION_HPP
