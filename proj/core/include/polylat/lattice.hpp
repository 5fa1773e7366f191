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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polylat/ground_set.hpp"
#include "polylat/rational.hpp"

namespace polylat {

using ElementId = std::uint32_t;

// Outcome of a structural predicate. When `holds` is false, `witness` names
// the elements that break it.
struct Verdict {
  bool holds = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return holds; }
};

// A finite lattice stored as a dense join table.
//
// Element ids always form a linear extension of the order (x < y implies
// id(x) < id(y)), so the bottom is id 0 and the top is id size()-1. Meets,
// covers and chain heights are derived once at construction.
class FinLattice {
 public:
  // Validates a join table (idempotent, commutative, associative, with a
  // bottom). Elements are renumbered by downset size unless the given order
  // is already a linear extension, in which case it is kept. Associativity is
  // checked on every triple up to kFullAssociativityCheck elements and on a
  // fixed-seed sample of triples above that. Throws InvariantError with a
  // witness on failure.
  static FinLattice from_join_table(std::vector<std::string> labels,
                                    std::vector<ElementId> join);

  // Builds the lattice whose Hasse diagram has the given cover pairs
  // (lower, upper). Pairs may include non-covers; the order is their
  // reflexive-transitive closure. Throws InvariantError on a cycle or when
  // some pair has zero or several minimal upper bounds.
  static FinLattice from_covers(std::vector<std::string> labels,
                                const std::vector<std::pair<ElementId, ElementId>>& covers);

  // The family ordered by inclusion. Requires a maximum member and closure
  // under pairwise intersection; labels are ground.format(set). Elements are
  // numbered by (cardinality, mask).
  static FinLattice from_closed_sets(const GroundSet& ground,
                                     std::vector<SubsetMask> family);

  // The sub-join-semilattice of `ambient` on `ids`, which must be closed
  // under joins. Its least element becomes the bottom. Labels are inherited.
  static FinLattice join_subsemilattice(const FinLattice& ambient,
                                        std::vector<ElementId> ids);

  static constexpr std::size_t kFullAssociativityCheck = 512;

  // Same lattice and ids with new labels, which must stay distinct.
  FinLattice relabeled(std::vector<std::string> labels) const;

  std::size_t size() const { return labels_.size(); }
  const std::string& label(ElementId x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;

  ElementId bottom() const { return 0; }
  ElementId top() const { return static_cast<ElementId>(size() - 1); }

  ElementId join(ElementId a, ElementId b) const { return join_[a * size() + b]; }
  ElementId meet(ElementId a, ElementId b) const { return meet_[a * size() + b]; }
  ElementId join_all(std::span<const ElementId> xs) const;
  bool leq(ElementId a, ElementId b) const { return join(a, b) == b; }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  // True when `upper` covers `lower`.
  bool covers(ElementId lower, ElementId upper) const;

  const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_covers_[x]; }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_covers_[x]; }
  // Length of the longest chain from the bottom to x.
  int height(ElementId x) const { return height_[x]; }
  std::vector<ElementId> atoms() const { return upper_covers_[0]; }

  friend bool operator==(const FinLattice& a, const FinLattice& b) {
    return a.labels_ == b.labels_ && a.join_ == b.join_;
  }

 private:
  FinLattice(std::vector<std::string> labels, std::vector<ElementId> join);
  void derive();

  std::vector<std::string> labels_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  std::vector<std::vector<ElementId>> lower_covers_;
  std::vector<std::vector<ElementId>> upper_covers_;
  std::vector<int> height_;
  std::unordered_map<std::string, ElementId> index_;
};

// Non-bottom elements with exactly one lower cover, in id order.
std::vector<ElementId> join_irreducibles(const FinLattice& l);

Verdict is_atomistic(const FinLattice& l);
// Cover form: x^y <. x and x^y <. y imply x <. x v y and y <. x v y.
Verdict is_semimodular(const FinLattice& l);
// Atomistic and semimodular.
Verdict is_geometric(const FinLattice& l);
// x ^ (y v z) == (x ^ y) v (x ^ z) for every triple.
Verdict is_distributive(const FinLattice& l);

// Strictly order-preserving submodular weighting r(x) = 1 - 2^-k(x), k the
// chain height, and its scaling by 2^k(top) into integers.
struct Weighting {
  std::vector<Rational> rational;
  std::vector<std::int64_t> integer;
  std::int64_t scale = 1;
};
Weighting submodular_weighting(const FinLattice& l);

// x < y implies w(x) < w(y).
Verdict check_strictly_order_preserving(const FinLattice& l, std::span<const Rational> w);
// w(x ^ y) + w(x v y) <= w(x) + w(y) for every pair.
Verdict check_submodular(const FinLattice& l, std::span<const Rational> w);

}  // namespace polylat
