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

#include "polylat/polymatroid.hpp"

#include <algorithm>
#include <set>

#include "polylat/error.hpp"

namespace polylat {

std::string describe(const AxiomViolation& v, const GroundSet& ground) {
  switch (v.kind) {
    case AxiomViolation::Kind::kNormalization:
      return "normalization: rank of {} is not 0";
    case AxiomViolation::Kind::kNegative:
      return "negative rank at " + ground.format(v.x);
    case AxiomViolation::Kind::kMonotonicity:
      return "monotonicity: rank " + ground.format(v.x) + " > rank " +
             ground.format(v.y);
    case AxiomViolation::Kind::kSubmodularity:
      return "submodularity: rank " + ground.format(v.x) + " + rank " +
             ground.format(v.y) + " < rank " + ground.format(v.x | v.y) +
             " + rank " + ground.format(v.base);
  }
  return "unknown violation";
}

std::vector<SubsetMask> ClosureTable::flats() const {
  std::vector<SubsetMask> out;
  for (std::size_t x = 0; x < cl.size(); ++x) {
    if (cl[x] == x) out.push_back(static_cast<SubsetMask>(x));
  }
  std::stable_sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) {
    return cardinality(a) < cardinality(b);
  });
  return out;
}

std::optional<std::string> ClosureTable::invariant_violation() const {
  if (cl.size() != ground.subset_count()) return "table has wrong size";
  const std::size_t n = ground.size();
  for (SubsetMask x : subset_iter(ground)) {
    if (!ground.owns(cl[x])) return "closure of " + ground.format(x) + " leaves the ground set";
    if (!is_subset(x, cl[x])) return "not extensive at " + ground.format(x);
    if (cl[cl[x]] != cl[x]) return "not idempotent at " + ground.format(x);
    // Monotonicity over single-element extensions implies the general case.
    for (std::size_t e = 0; e < n; ++e) {
      if (!contains(x, e) && !is_subset(cl[x], cl[x | singleton(e)])) {
        return "not monotone at " + ground.format(x) + " + " + ground.label(e);
      }
    }
  }
  auto fl = flats();
  for (std::size_t i = 0; i < fl.size(); ++i) {
    for (std::size_t j = i + 1; j < fl.size(); ++j) {
      SubsetMask meet = fl[i] & fl[j];
      if (cl[meet] != meet) {
        return "flats " + ground.format(fl[i]) + " and " + ground.format(fl[j]) +
               " intersect in a non-flat";
      }
    }
  }
  return std::nullopt;
}

Polymatroid::Polymatroid(GroundSet ground, std::vector<Rational> ranks)
    : ground_(std::move(ground)), ranks_(std::move(ranks)) {
  if (ranks_.size() != ground_.subset_count()) {
    throw InvariantError("rank table has " + std::to_string(ranks_.size()) +
                         " entries; expected " + std::to_string(ground_.subset_count()));
  }
}

Polymatroid Polymatroid::zero(GroundSet ground) {
  std::vector<Rational> ranks(ground.subset_count());
  return Polymatroid(std::move(ground), std::move(ranks));
}

std::vector<AxiomViolation> validate(const Polymatroid& p) {
  using Kind = AxiomViolation::Kind;
  std::vector<AxiomViolation> out;
  const std::size_t n = p.size();
  if (p.rank(0) != 0) out.push_back({Kind::kNormalization});
  for (SubsetMask x : subset_iter(p.ground())) {
    if (p.rank(x) < 0) out.push_back({Kind::kNegative, x});
  }
  for (SubsetMask x : subset_iter(p.ground())) {
    for (std::size_t e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      SubsetMask xe = x | singleton(e);
      if (p.rank(x) > p.rank(xe)) out.push_back({Kind::kMonotonicity, x, xe});
    }
  }
  for (SubsetMask x : subset_iter(p.ground())) {
    for (std::size_t e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      for (std::size_t f = e + 1; f < n; ++f) {
        if (contains(x, f)) continue;
        SubsetMask xe = x | singleton(e), xf = x | singleton(f);
        if (p.rank(xe) + p.rank(xf) < p.rank(xe | xf) + p.rank(x)) {
          out.push_back({Kind::kSubmodularity, xe, xf, x});
        }
      }
    }
  }
  return out;
}

SubsetMask closure(const Polymatroid& p, SubsetMask x) {
  SubsetMask out = x;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (!contains(x, e) && p.rank(x | singleton(e)) == p.rank(x)) out |= singleton(e);
  }
  return out;
}

ClosureTable closure_table(const Polymatroid& p) {
  ClosureTable table{p.ground(), std::vector<SubsetMask>(p.ground().subset_count())};
  for (SubsetMask x : subset_iter(p.ground())) table.cl[x] = closure(p, x);
  return table;
}

SubsetMask loops(const Polymatroid& p) {
  SubsetMask out = 0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p.rank(singleton(e)) == 0) out |= singleton(e);
  }
  return out;
}

std::vector<SubsetMask> parallel_classes(const Polymatroid& p) {
  const SubsetMask loop_set = loops(p);
  std::vector<SubsetMask> classes;
  std::vector<SubsetMask> class_closure;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (contains(loop_set, e)) continue;
    SubsetMask c = closure(p, singleton(e));
    auto it = std::find(class_closure.begin(), class_closure.end(), c);
    if (it == class_closure.end()) {
      class_closure.push_back(c);
      classes.push_back(singleton(e));
    } else {
      classes[it - class_closure.begin()] |= singleton(e);
    }
  }
  return classes;
}

bool is_simple(const Polymatroid& p) {
  if (loops(p) != 0) return false;
  auto classes = parallel_classes(p);
  return std::all_of(classes.begin(), classes.end(),
                     [](SubsetMask c) { return cardinality(c) == 1; });
}

Polymatroid delete_set(const Polymatroid& p, SubsetMask x) {
  const SubsetMask keep = p.ground().full() & ~x;
  GroundSet ground = p.ground().restrict_to(keep);
  std::vector<Rational> ranks(ground.subset_count());
  for (SubsetMask y : subset_iter(ground)) ranks[y] = p.rank(expand(y, keep));
  return Polymatroid(std::move(ground), std::move(ranks));
}

Polymatroid contract_set(const Polymatroid& p, SubsetMask x) {
  const SubsetMask keep = p.ground().full() & ~x;
  GroundSet ground = p.ground().restrict_to(keep);
  std::vector<Rational> ranks(ground.subset_count());
  for (SubsetMask y : subset_iter(ground)) {
    ranks[y] = p.rank(expand(y, keep) | x) - p.rank(x);
  }
  return Polymatroid(std::move(ground), std::move(ranks));
}

bool same_closure(const Polymatroid& p, const Polymatroid& q) {
  if (p.ground() != q.ground()) {
    throw MismatchError("same_closure: polymatroids over different ground sets");
  }
  return closure_table(p) == closure_table(q);
}

Simplification simplify(const Polymatroid& p) {
  Simplification out;
  SubsetMask keep = 0;
  for (SubsetMask c : parallel_classes(p)) {
    std::size_t rep = static_cast<std::size_t>(std::countr_zero(c));
    keep |= singleton(rep);
    out.classes.emplace(p.ground().label(rep), c);
  }
  out.simple = delete_set(p, p.ground().full() & ~keep);
  return out;
}

}  // namespace polylat
