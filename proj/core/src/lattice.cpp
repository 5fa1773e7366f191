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

#include "polylat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "polylat/error.hpp"

namespace polylat {
namespace {

// Fixed-width bitset over element ids, sized at runtime.
class IdSet {
 public:
  explicit IdSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  IdSet& operator|=(const IdSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  IdSet operator&(const IdSet& o) const {
    IdSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= o.words_[w];
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::string pair_text(const std::vector<std::string>& labels, ElementId a, ElementId b) {
  return "(" + labels[a] + ", " + labels[b] + ")";
}

}  // namespace

FinLattice::FinLattice(std::vector<std::string> labels, std::vector<ElementId> join)
    : labels_(std::move(labels)), join_(std::move(join)) {
  derive();
}

void FinLattice::derive() {
  const std::size_t m = size();
  index_.clear();
  for (ElementId x = 0; x < m; ++x) {
    if (!index_.emplace(labels_[x], x).second) {
      throw InvariantError("duplicate element label '" + labels_[x] + "'");
    }
  }

  meet_.assign(m * m, 0);
  for (ElementId a = 0; a < m; ++a) {
    for (ElementId b = a; b < m; ++b) {
      // The meet is the common lower bound with the largest id because ids
      // extend the order.
      ElementId z = a;
      while (!(leq(z, a) && leq(z, b))) --z;
      meet_[a * m + b] = meet_[b * m + a] = z;
    }
  }

  lower_covers_.assign(m, {});
  upper_covers_.assign(m, {});
  for (ElementId y = 0; y < m; ++y) {
    auto& lc = lower_covers_[y];
    for (ElementId x = y; x-- > 0;) {
      if (!leq(x, y)) continue;
      bool below_found = std::any_of(lc.begin(), lc.end(),
                                     [&](ElementId c) { return leq(x, c); });
      if (!below_found) lc.push_back(x);
    }
    std::reverse(lc.begin(), lc.end());
    for (ElementId x : lc) upper_covers_[x].push_back(y);
  }

  height_.assign(m, 0);
  for (ElementId x = 0; x < m; ++x) {
    for (ElementId c : lower_covers_[x]) height_[x] = std::max(height_[x], height_[c] + 1);
  }
}

FinLattice FinLattice::from_join_table(std::vector<std::string> labels,
                                       std::vector<ElementId> join) {
  const std::size_t m = labels.size();
  if (m == 0) throw InvariantError("a lattice needs at least one element");
  if (join.size() != m * m) {
    throw InvariantError("join table has " + std::to_string(join.size()) +
                         " entries; expected " + std::to_string(m * m));
  }
  auto j = [&](ElementId a, ElementId b) { return join[a * m + b]; };
  for (ElementId a = 0; a < m; ++a) {
    for (ElementId b = 0; b < m; ++b) {
      if (j(a, b) >= m) throw InvariantError("join table entry out of range at " + pair_text(labels, a, b));
    }
  }
  for (ElementId a = 0; a < m; ++a) {
    if (j(a, a) != a) throw InvariantError("join is not idempotent at " + labels[a]);
    for (ElementId b = a + 1; b < m; ++b) {
      if (j(a, b) != j(b, a)) {
        throw InvariantError("join is not commutative at " + pair_text(labels, a, b));
      }
    }
  }
  auto check_triple = [&](ElementId a, ElementId b, ElementId c) {
    if (j(j(a, b), c) != j(a, j(b, c))) {
      throw InvariantError("join is not associative at (" + labels[a] + ", " +
                           labels[b] + ", " + labels[c] + ")");
    }
  };
  if (m <= kFullAssociativityCheck) {
    for (ElementId a = 0; a < m; ++a)
      for (ElementId b = 0; b < m; ++b)
        for (ElementId c = 0; c < m; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(m - 1));
    constexpr std::size_t kSampledTriples = std::size_t{1} << 22;
    for (std::size_t t = 0; t < kSampledTriples; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  std::vector<std::size_t> down(m, 0);
  for (ElementId a = 0; a < m; ++a)
    for (ElementId b = 0; b < m; ++b)
      if (j(a, b) == b) ++down[b];
  std::vector<ElementId> order(m);
  std::iota(order.begin(), order.end(), 0);
  // Keep the given numbering when it already is a linear extension, so that
  // printing and re-reading a lattice preserves its ids.
  bool linear = true;
  for (ElementId a = 0; a < m && linear; ++a)
    for (ElementId b = 0; b < a && linear; ++b) linear = j(a, b) != b;
  if (!linear) {
    std::stable_sort(order.begin(), order.end(),
                     [&](ElementId a, ElementId b) { return down[a] < down[b]; });
  }
  const ElementId bottom = order.front();
  for (ElementId x = 0; x < m; ++x) {
    if (j(bottom, x) != x) {
      throw InvariantError("no bottom element: " + labels[bottom] + " and " + labels[x] +
                           " are both minimal");
    }
  }

  std::vector<ElementId> new_id(m);
  for (ElementId i = 0; i < m; ++i) new_id[order[i]] = i;
  std::vector<std::string> new_labels(m);
  std::vector<ElementId> new_join(m * m);
  for (ElementId a = 0; a < m; ++a) {
    new_labels[new_id[a]] = std::move(labels[a]);
    for (ElementId b = 0; b < m; ++b) new_join[new_id[a] * m + new_id[b]] = new_id[j(a, b)];
  }
  return FinLattice(std::move(new_labels), std::move(new_join));
}

FinLattice FinLattice::from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<ElementId, ElementId>>& covers) {
  const std::size_t m = labels.size();
  if (m == 0) throw InvariantError("a lattice needs at least one element");
  std::vector<std::vector<ElementId>> up(m);
  std::vector<std::size_t> indegree(m, 0);
  for (auto [lo, hi] : covers) {
    if (lo >= m || hi >= m) throw InvariantError("cover pair refers to an unknown element");
    if (lo == hi) throw InvariantError("cycle detected: " + labels[lo] + " < " + labels[lo]);
    up[lo].push_back(hi);
    ++indegree[hi];
  }
  // Kahn's algorithm; leftover elements lie on or above a cycle.
  std::vector<ElementId> topo;
  std::vector<ElementId> ready;
  for (ElementId x = 0; x < m; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    ElementId x = ready.back();
    ready.pop_back();
    topo.push_back(x);
    for (ElementId y : up[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  if (topo.size() != m) {
    for (ElementId x = 0; x < m; ++x) {
      if (indegree[x] != 0) throw InvariantError("cycle detected through " + labels[x]);
    }
  }

  std::vector<IdSet> upset(m, IdSet(m));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    upset[*it].set(*it);
    for (ElementId y : up[*it]) upset[*it] |= upset[y];
  }

  std::vector<ElementId> join(m * m);
  for (ElementId a = 0; a < m; ++a) {
    for (ElementId b = a; b < m; ++b) {
      IdSet common = upset[a] & upset[b];
      std::vector<ElementId> minimal;
      for (ElementId u = 0; u < m; ++u) {
        if (!common.test(u)) continue;
        bool is_min = true;
        for (ElementId v = 0; v < m && is_min; ++v) {
          if (v != u && common.test(v) && upset[v].test(u)) is_min = false;
        }
        if (is_min) minimal.push_back(u);
      }
      if (minimal.size() != 1) {
        throw InvariantError("not a lattice: " + pair_text(labels, a, b) + " has " +
                             std::to_string(minimal.size()) + " minimal upper bounds");
      }
      join[a * m + b] = join[b * m + a] = minimal.front();
    }
  }
  return from_join_table(std::move(labels), std::move(join));
}

FinLattice FinLattice::from_closed_sets(const GroundSet& ground, std::vector<SubsetMask> family) {
  std::sort(family.begin(), family.end(), [](SubsetMask a, SubsetMask b) {
    return std::pair(cardinality(a), a) < std::pair(cardinality(b), b);
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.empty()) throw InvariantError("empty family of closed sets");
  for (SubsetMask s : family) {
    if (!ground.owns(s)) throw InvariantError("closed set outside the ground set");
  }
  const SubsetMask max = family.back();
  for (SubsetMask s : family) {
    if (!is_subset(s, max)) {
      throw InvariantError("family has no maximum: " + ground.format(s) + " is not below " +
                           ground.format(max));
    }
  }
  std::unordered_set<SubsetMask> members(family.begin(), family.end());
  const std::size_t m = family.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!members.count(family[a] & family[b])) {
        throw InvariantError("family not closed under intersection: " +
                             ground.format(family[a]) + " and " + ground.format(family[b]));
      }
    }
  }
  std::vector<ElementId> join(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      SubsetMask u = family[a] | family[b];
      std::size_t c = b;
      while (!is_subset(u, family[c])) ++c;
      join[a * m + b] = join[b * m + a] = static_cast<ElementId>(c);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (SubsetMask s : family) labels.push_back(ground.format(s));
  return FinLattice(std::move(labels), std::move(join));
}

FinLattice FinLattice::join_subsemilattice(const FinLattice& ambient, std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw InvariantError("empty sub-join-semilattice");
  std::vector<ElementId> local(ambient.size(), static_cast<ElementId>(-1));
  for (ElementId i = 0; i < ids.size(); ++i) local[ids[i]] = i;
  const std::size_t m = ids.size();
  std::vector<ElementId> join(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (!ambient.leq(ids[0], ids[a])) {
      throw InvariantError("sub-join-semilattice has no least element: " +
                           ambient.label(ids[0]) + " vs " + ambient.label(ids[a]));
    }
    for (std::size_t b = a; b < m; ++b) {
      ElementId j = local[ambient.join(ids[a], ids[b])];
      if (j == static_cast<ElementId>(-1)) {
        throw InvariantError("set not closed under join at (" + ambient.label(ids[a]) + ", " +
                             ambient.label(ids[b]) + ")");
      }
      join[a * m + b] = join[b * m + a] = j;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (ElementId x : ids) labels.push_back(ambient.label(x));
  return FinLattice(std::move(labels), std::move(join));
}

FinLattice FinLattice::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) throw InvariantError("relabeling has the wrong length");
  FinLattice out = *this;
  out.labels_ = std::move(labels);
  out.derive();
  return out;
}

std::optional<ElementId> FinLattice::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FinLattice::join_all(std::span<const ElementId> xs) const {
  ElementId acc = bottom();
  for (ElementId x : xs) acc = join(acc, x);
  return acc;
}

bool FinLattice::covers(ElementId lower, ElementId upper) const {
  const auto& lc = lower_covers_[upper];
  return std::binary_search(lc.begin(), lc.end(), lower);
}

std::vector<ElementId> join_irreducibles(const FinLattice& l) {
  std::vector<ElementId> out;
  for (ElementId x = 1; x < l.size(); ++x) {
    if (l.lower_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

Verdict is_atomistic(const FinLattice& l) {
  const auto atoms = l.atoms();
  for (ElementId x = 0; x < l.size(); ++x) {
    ElementId acc = l.bottom();
    for (ElementId a : atoms)
      if (l.leq(a, x)) acc = l.join(acc, a);
    if (acc != x) return Verdict::fail("element " + l.label(x) + " is not a join of atoms");
  }
  return Verdict::pass();
}

Verdict is_semimodular(const FinLattice& l) {
  for (ElementId x = 0; x < l.size(); ++x) {
    for (ElementId y = x + 1; y < l.size(); ++y) {
      ElementId m = l.meet(x, y);
      if (!l.covers(m, x) || !l.covers(m, y)) continue;
      ElementId j = l.join(x, y);
      if (!l.covers(x, j) || !l.covers(y, j)) {
        return Verdict::fail("elements " + l.label(x) + " and " + l.label(y) + " cover " +
                             l.label(m) + " but are not both covered by " + l.label(j));
      }
    }
  }
  return Verdict::pass();
}

Verdict is_geometric(const FinLattice& l) {
  if (auto v = is_atomistic(l); !v) return v;
  return is_semimodular(l);
}

Verdict is_distributive(const FinLattice& l) {
  const auto m = static_cast<ElementId>(l.size());
  for (ElementId x = 0; x < m; ++x)
    for (ElementId y = 0; y < m; ++y)
      for (ElementId z = y + 1; z < m; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return Verdict::fail("distributivity fails at (" + l.label(x) + ", " + l.label(y) +
                               ", " + l.label(z) + ")");
        }
      }
  return Verdict::pass();
}

Weighting submodular_weighting(const FinLattice& l) {
  const int top_height = l.height(l.top());
  if (top_height > 62) {
    throw OverflowError("lattice height " + std::to_string(top_height) +
                        " too large for an int64 weighting");
  }
  Weighting w;
  w.scale = std::int64_t{1} << top_height;
  for (ElementId x = 0; x < l.size(); ++x) {
    const int k = l.height(x);
    w.rational.push_back(Rational(1) - Rational(1, std::int64_t{1} << k));
    w.integer.push_back(w.scale - (std::int64_t{1} << (top_height - k)));
  }
  return w;
}

Verdict check_strictly_order_preserving(const FinLattice& l, std::span<const Rational> w) {
  if (w.size() != l.size()) return Verdict::fail("weighting has the wrong number of values");
  for (ElementId y = 0; y < l.size(); ++y) {
    for (ElementId x : l.lower_covers(y)) {
      if (!(w[x] < w[y])) {
        return Verdict::fail("not strictly order-preserving: " + l.label(x) + " < " +
                             l.label(y) + " but weights " + w[x].to_string() + " >= " +
                             w[y].to_string());
      }
    }
  }
  return Verdict::pass();
}

Verdict check_submodular(const FinLattice& l, std::span<const Rational> w) {
  if (w.size() != l.size()) return Verdict::fail("weighting has the wrong number of values");
  for (ElementId x = 0; x < l.size(); ++x) {
    for (ElementId y = x + 1; y < l.size(); ++y) {
      if (w[l.meet(x, y)] + w[l.join(x, y)] > w[x] + w[y]) {
        return Verdict::fail("not submodular at (" + l.label(x) + ", " + l.label(y) + ")");
      }
    }
  }
  return Verdict::pass();
}

}  // namespace polylat
