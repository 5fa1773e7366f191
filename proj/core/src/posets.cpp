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

#include "polylat/posets.hpp"

#include <algorithm>
#include <set>

#include "polylat/error.hpp"

namespace polylat {

Poset::Poset(std::vector<std::string> labels,
             const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : ground_(std::move(labels)), down_(ground_.size()) {
  const std::size_t n = ground_.size();
  for (std::size_t x = 0; x < n; ++x) down_[x] = singleton(x);
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw InvariantError("order relation index out of range");
    if (a == b) throw InvariantError("cycle through " + ground_.label(a));
    down_[b] |= singleton(a);
  }
  // Transitive closure, one pivot at a time.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (contains(down_[x], k)) down_[x] |= down_[k];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq(a, b) && leq(b, a)) {
        throw InvariantError("cycle through " + ground_.label(a) + " and " + ground_.label(b));
      }
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < size() && !between; ++c) {
        between = less(a, c) && less(c, b);
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

bool Poset::is_ideal(SubsetMask x) const {
  for (std::size_t e = 0; e < size(); ++e) {
    if (contains(x, e) && !is_subset(down_[e], x)) return false;
  }
  return true;
}

std::vector<SubsetMask> Poset::ideals() const {
  std::vector<SubsetMask> out;
  for (SubsetMask x : subset_iter(ground_)) {
    if (is_ideal(x)) out.push_back(x);
  }
  return out;
}

Poset Poset::induced(SubsetMask keep) const {
  std::vector<std::string> labels;
  std::vector<std::size_t> old;
  for (std::size_t e = 0; e < size(); ++e) {
    if (contains(keep, e)) {
      labels.push_back(label(e));
      old.push_back(e);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t a = 0; a < old.size(); ++a) {
    for (std::size_t b = 0; b < old.size(); ++b) {
      if (less(old[a], old[b])) relations.emplace_back(a, b);
    }
  }
  return Poset(std::move(labels), relations);
}

std::map<std::string, ElementId> principal_labeling(const Poset& p, const IdealLattice& il) {
  std::map<std::string, ElementId> out;
  for (std::size_t e = 0; e < p.size(); ++e) out.emplace(p.label(e), il.principal.at(e));
  return out;
}

IdealLattice ideal_lattice(const Poset& p) {
  std::vector<SubsetMask> family = p.ideals();
  FinLattice lattice = FinLattice::from_closed_sets(p.ground(), family);
  std::vector<SubsetMask> ideal(lattice.size());
  for (SubsetMask x : family) ideal[*lattice.find(p.ground().format(x))] = x;
  std::vector<ElementId> principal;
  for (std::size_t e = 0; e < p.size(); ++e) {
    principal.push_back(*lattice.find(p.ground().format(p.down(e))));
  }
  GenLattice gl(std::move(lattice), principal);
  return {std::move(gl), std::move(ideal), std::move(principal)};
}

IrreduciblesPoset irreducibles_poset(const FinLattice& l) {
  const auto irr = join_irreducibles(l);
  std::vector<std::string> labels;
  for (ElementId x : irr) labels.push_back(l.label(x));
  if (!std::all_of(labels.begin(), labels.end(), is_valid_label)) {
    for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = "j" + std::to_string(k + 1);
  }
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t a = 0; a < irr.size(); ++a) {
    for (std::size_t b = 0; b < irr.size(); ++b) {
      if (l.less(irr[a], irr[b])) relations.emplace_back(a, b);
    }
  }
  return {Poset(std::move(labels), relations), irr};
}

std::vector<OrderMinor> enumerate_order_minors(const Poset& p) {
  std::vector<OrderMinor> out;
  for (SubsetMask j : p.ideals()) {
    const SubsetMask rest = p.ground().full() & ~j;
    for (SubsetMask i = 0;; i = (i - rest) & rest) {  // submasks of rest, increasing
      out.push_back({i, j});
      if (i == rest) break;
    }
  }
  return out;
}

std::uint64_t order_minor_count(const Poset& p) {
  std::uint64_t total = 0;
  for (SubsetMask j : p.ideals()) total += std::uint64_t{1} << (p.size() - cardinality(j));
  return total;
}

MinorHandle order_minor_to_lattice_minor(const Poset& p, const IdealLattice& il,
                                         const OrderMinor& om) {
  if (!p.ground().owns(om.i | om.j) || (om.i & om.j) || !p.is_ideal(om.j)) {
    throw InvariantError("(" + p.ground().format(om.i) + ", " + p.ground().format(om.j) +
                         ") is not an order minor");
  }
  auto names = [&](SubsetMask x) {
    std::vector<std::string> out;
    for (std::size_t e = 0; e < p.size(); ++e)
      if (contains(x, e)) out.push_back(p.label(e));
    return out;
  };
  MinorBuilder b(il.gl, principal_labeling(p, il));
  b.restrict_ground(names(om.i | om.j));
  b.contract_ground(names(om.j));
  return b.handle();
}

MinorHandle order_minor_to_lattice_minor(const Poset& p, const OrderMinor& om) {
  return order_minor_to_lattice_minor(p, ideal_lattice(p), om);
}

BijectionCheck verify_order_minor_bijection(const Poset& p) {
  const IdealLattice il = ideal_lattice(p);
  const auto minors = enumerate_order_minors(p);
  BijectionCheck out;
  out.lhs = minors.size();
  out.rhs = count_minors(il.gl);
  const std::uint64_t formula = order_minor_count(p);
  if (out.lhs != formula || out.rhs != formula) {
    out.verdict = Verdict::fail("counts " + std::to_string(out.lhs) + ", " +
                                std::to_string(out.rhs) + " and formula " +
                                std::to_string(formula) + " disagree");
    return out;
  }
  const GroundSet& ground = p.ground();
  std::set<MinorHandle> seen;
  for (const OrderMinor& om : minors) {
    const std::string name = "(" + ground.format(om.i) + ", " + ground.format(om.j) + ")";
    const MinorHandle h = order_minor_to_lattice_minor(p, il, om);
    const auto candidates = minor_generator_candidates(il.gl, h.apex);
    if (!std::includes(candidates.begin(), candidates.end(), h.kept.begin(), h.kept.end())) {
      out.verdict = Verdict::fail(name + " gives an invalid handle");
      return out;
    }
    if (!seen.insert(h).second) {
      out.verdict = Verdict::fail(name + " collides with another order minor");
      return out;
    }
    const GenLattice minor = materialize(il.gl, h).gl;
    if (!gl_isomorphic(minor, ideal_lattice(p.induced(om.i)).gl)) {
      out.verdict = Verdict::fail(name + " is not isomorphic to the ideal lattice of I");
      return out;
    }
  }
  if (seen.size() != out.rhs) {
    out.verdict = Verdict::fail("hit " + std::to_string(seen.size()) + " of " +
                                std::to_string(out.rhs) + " lattice minors");
  }
  return out;
}

Verdict check_distr_no_paras(const FinLattice& l) {
  const auto irr = join_irreducibles(l);
  for (ElementId x = 0; x < l.size(); ++x) {
    for (std::size_t a = 0; a < irr.size(); ++a) {
      const ElementId ia = l.join(irr[a], x);
      if (ia == x) continue;
      for (std::size_t b = a + 1; b < irr.size(); ++b) {
        const ElementId ib = l.join(irr[b], x);
        if (ib == ia) {
          return Verdict::fail("l = " + l.label(x) + ", i = " + l.label(irr[a]) + ", j = " +
                               l.label(irr[b]) + ", both joins = " + l.label(ia));
        }
      }
    }
  }
  return Verdict::pass();
}

}  // namespace polylat
