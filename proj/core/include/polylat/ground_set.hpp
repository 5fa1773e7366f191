// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

namespace polylat {

// A subset of a ground set; bit i is the i-th label of the GroundSet.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 20;

inline constexpr bool contains(SubsetMask set, std::size_t element) {
  return (set >> element) & 1u;
}
inline constexpr bool is_subset(SubsetMask a, SubsetMask b) {
  return (a & ~b) == 0;
}
inline constexpr SubsetMask singleton(std::size_t element) {
  return SubsetMask{1} << element;
}
inline constexpr int cardinality(SubsetMask set) { return std::popcount(set); }

// Squeezes the bits of `set` selected by `keep` into positions 0..|keep|-1,
// preserving order (a software PEXT). Used to reindex after deletion.
SubsetMask compress(SubsetMask set, SubsetMask keep);
// Inverse of compress: spreads the low bits of `set` onto the positions of
// `keep`.
SubsetMask expand(SubsetMask set, SubsetMask keep);

// Ordered list of distinct element names. The order fixes bit positions.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws InvariantError on duplicate or malformed labels or more than
  // kMaxGroundSize elements.
  explicit GroundSet(std::vector<std::string> labels);
  // Labels "1".."n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  SubsetMask full() const { return (SubsetMask{1} << size()) - 1; }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  bool owns(SubsetMask set) const { return is_subset(set, full()); }

  // The ground set of the elements in `keep`, in the same relative order.
  GroundSet restrict_to(SubsetMask keep) const;

  // "{}" or "{a,b,c}" in label order.
  std::string format(SubsetMask set) const;
  // Inverse of format; throws InvariantError naming an unknown label.
  SubsetMask parse(std::string_view text) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

// All 2^n subsets of `g` in increasing mask order.
inline auto subset_iter(const GroundSet& g) {
  return std::views::iota(SubsetMask{0}, static_cast<SubsetMask>(g.subset_count()));
}

// Submasks of `set` in increasing order, including 0 and `set` itself.
template <typename Fn>
void for_each_submask(SubsetMask set, Fn&& fn) {
  SubsetMask sub = 0;
  while (true) {
    fn(sub);
    if (sub == set) break;
    sub = (sub - set) & set;
  }
}

// Labels are non-empty and free of whitespace and the characters the text
// formats reserve.
bool is_valid_label(std::string_view label);

}  // namespace polylat
