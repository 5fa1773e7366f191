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

// Finite posets, their lattices of lower order ideals, and order minors.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polylat/genlattice.hpp"
#include "polylat/ground_set.hpp"
#include "polylat/lattice.hpp"
#include "polylat/minors.hpp"
#include "polylat/report.hpp"

namespace polylat {

// A partial order on at most kMaxGroundSize labeled elements, stored as the
// principal lower ideal of each element.
class Poset {
 public:
  Poset() = default;
  // The order generated by `relations` (pairs a < b, by index). Throws
  // InvariantError on a cycle or an index out of range.
  Poset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  const std::string& label(std::size_t x) const { return ground_.label(x); }
  // Elements <= x, x included.
  SubsetMask down(std::size_t x) const { return down_[x]; }
  bool leq(std::size_t a, std::size_t b) const { return contains(down_[b], a); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  // Hasse diagram pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  bool is_ideal(SubsetMask x) const;
  // Every lower order ideal, in increasing mask order.
  std::vector<SubsetMask> ideals() const;
  // The subposet on `keep` with the inherited order.
  Poset induced(SubsetMask keep) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  GroundSet ground_;
  std::vector<SubsetMask> down_;
};

// The distributive lattice of lower ideals ordered by inclusion, generated
// by the principal ideals. Element labels are ground.format(ideal).
struct IdealLattice {
  GenLattice gl;
  std::vector<SubsetMask> ideal;      // by element id
  std::vector<ElementId> principal;   // by poset element
};
IdealLattice ideal_lattice(const Poset& p);
// Poset label -> its principal ideal, for ground-indexed minors.
std::map<std::string, ElementId> principal_labeling(const Poset& p, const IdealLattice& il);

// The join irreducibles of l with the induced order, labeled as in l when
// every such label is a valid ground label and "j1".."jk" otherwise.
// `element[i]` is the lattice id behind poset element i. Throws
// InvariantError beyond kMaxGroundSize irreducibles.
struct IrreduciblesPoset {
  Poset poset;
  std::vector<ElementId> element;
};
IrreduciblesPoset irreducibles_poset(const FinLattice& l);

// (I, J) with J a lower ideal and I disjoint from J.
struct OrderMinor {
  SubsetMask i = 0;
  SubsetMask j = 0;

  friend bool operator==(const OrderMinor&, const OrderMinor&) = default;
};

// Ideals J by mask, then I by mask.
std::vector<OrderMinor> enumerate_order_minors(const Poset& p);
// Sum over ideals J of 2^(|P| - |J|).
std::uint64_t order_minor_count(const Poset& p);

// ((L, irr L)|_{I u J}) / J on the ideal lattice, via the principal-ideal
// labeling. Throws InvariantError if om is not an order minor of p.
MinorHandle order_minor_to_lattice_minor(const Poset& p, const IdealLattice& il, const OrderMinor& om);
MinorHandle order_minor_to_lattice_minor(const Poset& p, const OrderMinor& om);

// Checks the map above is a bijection onto the minors of the ideal lattice,
// that both counts equal order_minor_count, and that each minor is
// isomorphic to the ideal lattice of I.
BijectionCheck verify_order_minor_bijection(const Poset& p);

// For every l and distinct join irreducibles i, j that both move l,
// i v l != j v l. Fails with a witness otherwise.
Verdict check_distr_no_paras(const FinLattice& l);

}  // namespace polylat
