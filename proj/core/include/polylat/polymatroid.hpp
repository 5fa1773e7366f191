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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polylat/ground_set.hpp"
#include "polylat/rational.hpp"

namespace polylat {

// One failed polymatroid axiom together with the sets that witness it.
struct AxiomViolation {
  enum class Kind { kNormalization, kNegative, kMonotonicity, kSubmodularity };
  Kind kind;
  // kNormalization/kNegative: the set. kMonotonicity: smaller <= larger
  // fails. kSubmodularity: x = X+e, y = X+f, with `base` = X.
  SubsetMask x = 0;
  SubsetMask y = 0;
  SubsetMask base = 0;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

std::string describe(const AxiomViolation& v, const GroundSet& ground);

// A closure operator tabulated over all subsets of a ground set.
struct ClosureTable {
  GroundSet ground;
  std::vector<SubsetMask> cl;

  SubsetMask operator()(SubsetMask x) const { return cl[x]; }
  // Distinct closed sets ordered by (cardinality, mask).
  std::vector<SubsetMask> flats() const;
  // Empty when the table is extensive, monotone and idempotent with an
  // intersection-closed image; otherwise a human-readable witness.
  std::optional<std::string> invariant_violation() const;

  friend bool operator==(const ClosureTable&, const ClosureTable&) = default;
};

// Rank function over all 2^n subsets of a ground set. Construction only
// checks table shape; axioms are checked by validate().
class Polymatroid {
 public:
  Polymatroid() = default;
  // Throws InvariantError unless ranks.size() == 2^|ground|.
  Polymatroid(GroundSet ground, std::vector<Rational> ranks);

  // The polymatroid that is identically zero.
  static Polymatroid zero(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  const Rational& rank(SubsetMask x) const { return ranks_[x]; }
  const std::vector<Rational>& ranks() const { return ranks_; }

  friend bool operator==(const Polymatroid&, const Polymatroid&) = default;

 private:
  GroundSet ground_;
  std::vector<Rational> ranks_;
};

// Checks normalization, nonnegativity, monotonicity (via single-element
// extensions) and submodularity in the local form
//   r(X+e) + r(X+f) >= r(X+e+f) + r(X)   for distinct e, f not in X.
// Returns every violation found; empty means valid.
std::vector<AxiomViolation> validate(const Polymatroid& p);

SubsetMask closure(const Polymatroid& p, SubsetMask x);
ClosureTable closure_table(const Polymatroid& p);

SubsetMask loops(const Polymatroid& p);
// Classes of non-loop elements with equal singleton closures, ordered by
// their smallest element.
std::vector<SubsetMask> parallel_classes(const Polymatroid& p);
bool is_simple(const Polymatroid& p);

// Restriction to E \ x.
Polymatroid delete_set(const Polymatroid& p, SubsetMask x);
// Y -> r(Y + x) - r(x) on E \ x.
Polymatroid contract_set(const Polymatroid& p, SubsetMask x);

// Throws MismatchError for different ground sets.
bool same_closure(const Polymatroid& p, const Polymatroid& q);

struct Simplification {
  Polymatroid simple;
  // Kept label -> its parallel class, as a subset of the original ground set.
  std::map<std::string, SubsetMask> classes;
};

// Deletes loops and all but the smallest element of each parallel class.
Simplification simplify(const Polymatroid& p);

}  // namespace polylat
