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

#include "polylat/graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "polylat/error.hpp"

namespace polylat {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when a and b were already together.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_edge_mask(const LabeledGraph& g, SubsetMask a) {
  if (g.edge_count() < 32 && (a >> g.edge_count()) != 0) {
    throw InvariantError("edge set mentions edges beyond the " +
                         std::to_string(g.edge_count()) + " edges of the graph");
  }
}

// Labels of a and b name the same elements, generators and joins.
Verdict same_labeled(const GenLattice& a, const GenLattice& b) {
  const FinLattice& la = a.lattice();
  const FinLattice& lb = b.lattice();
  if (la.size() != lb.size()) {
    return Verdict::fail("sizes differ: " + std::to_string(la.size()) + " vs " +
                         std::to_string(lb.size()));
  }
  std::vector<ElementId> to_b(la.size());
  for (ElementId x = 0; x < la.size(); ++x) {
    auto y = lb.find(la.label(x));
    if (!y) return Verdict::fail("element " + la.label(x) + " missing");
    to_b[x] = *y;
    if (a.is_gen(x) != b.is_gen(*y)) return Verdict::fail("generator status of " + la.label(x));
  }
  for (ElementId x = 0; x < la.size(); ++x) {
    for (ElementId y = x + 1; y < la.size(); ++y) {
      if (to_b[la.join(x, y)] != lb.join(to_b[x], to_b[y])) {
        return Verdict::fail("join of " + la.label(x) + " and " + la.label(y));
      }
    }
  }
  return Verdict::pass();
}

}  // namespace

LabeledGraph::LabeledGraph(std::vector<std::string> names, std::vector<Edge> edges)
    : LabeledGraph(names, [&] {
        std::vector<SubsetMask> blocks;
        for (std::size_t i = 0; i < names.size() && i < 32; ++i) blocks.push_back(singleton(i));
        return blocks;
      }(), std::move(edges)) {}

LabeledGraph::LabeledGraph(std::vector<std::string> universe, std::vector<SubsetMask> blocks,
                           std::vector<Edge> edges)
    : universe_(std::move(universe)) {
  const GroundSet names(universe_);  // validates names and the size bound
  SubsetMask seen = 0;
  for (SubsetMask b : blocks) {
    if (b == 0) throw InvariantError("empty vertex block");
    if (b & seen) throw InvariantError("vertex blocks overlap at " + names.format(b & seen));
    if (!names.owns(b)) throw InvariantError("vertex block outside the vertex names");
    seen |= b;
  }
  if (seen != names.full()) {
    throw InvariantError("vertex blocks miss " + names.format(names.full() & ~seen));
  }
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::countr_zero(blocks[a]) < std::countr_zero(blocks[b]);
  });
  std::vector<std::size_t> position(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    blocks_.push_back(blocks[order[i]]);
    position[order[i]] = i;
  }
  for (auto [u, v] : edges) {
    if (u >= blocks_.size() || v >= blocks_.size()) {
      throw InvariantError("edge endpoint " + std::to_string(std::max(u, v)) +
                           " out of range");
    }
    u = position[u];
    v = position[v];
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

std::string LabeledGraph::vertex_label(std::size_t v) const {
  const bool short_names = std::all_of(universe_.begin(), universe_.end(),
                                       [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!contains(blocks_[v], i)) continue;
    if (!out.empty() && !short_names) out += ',';
    out += universe_[i];
  }
  return out;
}

Partition LabeledGraph::partition() const {
  std::vector<int> block_of(universe_.size());
  for (std::size_t v = 0; v < blocks_.size(); ++v) {
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (contains(blocks_[v], i)) block_of[i] = static_cast<int>(v);
    }
  }
  return Partition(universe_, block_of);
}

bool LabeledGraph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].first == edges_[i].second) return false;
    if (i > 0 && edges_[i] == edges_[i - 1]) return false;
  }
  return true;
}

int graphic_rank(const LabeledGraph& g, SubsetMask a) {
  require_edge_mask(g, a);
  UnionFind uf(g.vertex_count());
  int rank = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (contains(a, e) && uf.unite(g.edges()[e].first, g.edges()[e].second)) ++rank;
  }
  return rank;
}

Partition component_partition(const LabeledGraph& g, SubsetMask a) {
  require_edge_mask(g, a);
  UnionFind uf(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (contains(a, e)) uf.unite(g.edges()[e].first, g.edges()[e].second);
  }
  std::vector<int> block_of(g.universe().size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < block_of.size(); ++i) {
      if (contains(g.blocks()[v], i)) block_of[i] = static_cast<int>(uf.find(v));
    }
  }
  return Partition(g.universe(), block_of);
}

Polymatroid cycle_matroid(const LabeledGraph& g) {
  if (g.edge_count() > kMaxGroundSize) {
    throw InvariantError("cycle matroid needs at most " + std::to_string(kMaxGroundSize) +
                         " edges, graph has " + std::to_string(g.edge_count()));
  }
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < g.edge_count(); ++e) labels.push_back("e" + std::to_string(e + 1));
  GroundSet ground(std::move(labels));
  std::vector<Rational> ranks;
  ranks.reserve(ground.subset_count());
  for (SubsetMask a : subset_iter(ground)) ranks.emplace_back(graphic_rank(g, a));
  return Polymatroid(std::move(ground), std::move(ranks));
}

GraphFlatsLattice graph_flats(const LabeledGraph& g) {
  LabeledGraph simple = simplify_graph(g);
  const FlatsGenLattice fg = flats_genlattice(cycle_matroid(simple));
  std::vector<Partition> partitions;
  std::vector<std::string> labels;
  for (SubsetMask flat : fg.flat) {
    partitions.push_back(component_partition(simple, flat));
    labels.push_back(partitions.back().to_string());
  }
  GenLattice gl(fg.gl().lattice().relabeled(std::move(labels)), fg.gl().gens());
  return {std::move(gl), std::move(partitions), fg.flat, std::move(simple)};
}

LabeledGraph graph_minor(const LabeledGraph& g, SubsetMask contract, SubsetMask remove) {
  require_edge_mask(g, contract);
  require_edge_mask(g, remove);
  if (contract & remove) throw InvariantError("contracted and deleted edges overlap");
  UnionFind uf(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (contains(contract, e)) uf.unite(g.edges()[e].first, g.edges()[e].second);
  }
  std::map<std::size_t, std::size_t> vertex_of_root;
  std::vector<SubsetMask> blocks;
  std::vector<std::size_t> image(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = vertex_of_root.emplace(uf.find(v), blocks.size());
    if (inserted) blocks.push_back(0);
    blocks[it->second] |= g.blocks()[v];
    image[v] = it->second;
  }
  std::vector<LabeledGraph::Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (contains(contract | remove, e)) continue;
    edges.emplace_back(image[g.edges()[e].first], image[g.edges()[e].second]);
  }
  return LabeledGraph(g.universe(), std::move(blocks), std::move(edges));
}

LabeledGraph simplify_graph(const LabeledGraph& g) {
  std::vector<LabeledGraph::Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.first != e.second) edges.push_back(e);
  }
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return LabeledGraph(g.universe(), g.blocks(), std::move(edges));
}

std::vector<LabeledGraph> enumerate_simple_labeled_minors(const LabeledGraph& g) {
  const LabeledGraph simple = simplify_graph(g);
  const std::size_t m = simple.edge_count();
  if (m > kMaxMinorEnumerationEdges) {
    throw InvariantError("brute-force minor enumeration supports at most " +
                         std::to_string(kMaxMinorEnumerationEdges) + " edges");
  }
  const SubsetMask all = (SubsetMask{1} << m) - 1;
  std::set<LabeledGraph> minors;
  for_each_submask(all, [&](SubsetMask contract) {
    for_each_submask(all & ~contract, [&](SubsetMask remove) {
      minors.insert(simplify_graph(graph_minor(simple, contract, remove)));
    });
  });
  return {minors.begin(), minors.end()};
}

MinorHandle graph_minor_handle(const GraphFlatsLattice& flats, const LabeledGraph& h) {
  if (h.universe() != flats.simple.universe()) {
    throw InvariantError("minor is over different vertex names");
  }
  if (!h.is_simple()) throw InvariantError("minor is not simple");
  const FinLattice& l = flats.gl.lattice();
  const Partition vertices = h.partition();
  auto apex = l.find(vertices.to_string());
  if (!apex) {
    throw InvariantError("vertex partition " + vertices.to_string() + " is not a flat");
  }
  const auto candidates = minor_generator_candidates(flats.gl, *apex);
  MinorHandle handle{*apex, {}};
  for (auto [u, v] : h.edges()) {
    std::vector<int> block_of = vertices.block_ids();
    for (int& b : block_of) {
      if (b == vertices.block_ids()[std::countr_zero(h.blocks()[v])]) {
        b = vertices.block_ids()[std::countr_zero(h.blocks()[u])];
      }
    }
    const std::string merged = Partition(h.universe(), block_of).to_string();
    auto k = l.find(merged);
    if (!k || !std::binary_search(candidates.begin(), candidates.end(), *k)) {
      throw InvariantError("edge " + h.vertex_label(u) + "-" + h.vertex_label(v) +
                           " does not give a generator above " + vertices.to_string());
    }
    handle.kept.push_back(*k);
  }
  std::sort(handle.kept.begin(), handle.kept.end());
  if (std::adjacent_find(handle.kept.begin(), handle.kept.end()) != handle.kept.end()) {
    throw InvariantError("two edges give the same generator");
  }
  return handle;
}

LabeledGraph graph_of_handle(const GraphFlatsLattice& flats, const MinorHandle& h) {
  const Partition& apex = flats.partition.at(h.apex);
  std::vector<SubsetMask> blocks;
  for (const auto& block : apex.blocks()) {
    SubsetMask mask = 0;
    for (std::size_t i : block) mask |= singleton(i);
    blocks.push_back(mask);
  }
  std::vector<LabeledGraph::Edge> edges;
  for (ElementId k : h.kept) {
    const Partition& coarser = flats.partition.at(k);
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      groups[coarser.block_of(std::countr_zero(blocks[b]))].push_back(b);
    }
    std::vector<LabeledGraph::Edge> merges;
    bool wide = false;
    for (const auto& [id, members] : groups) {
      if (members.size() == 2) merges.emplace_back(members[0], members[1]);
      wide = wide || members.size() > 2;
    }
    if (wide || merges.size() != 1) {
      throw InvariantError("generator " + flats.gl.lattice().label(k) +
                           " does not merge exactly two blocks of " + apex.to_string());
    }
    edges.push_back(merges[0]);
  }
  return LabeledGraph(apex.vertices(), std::move(blocks), std::move(edges));
}

BijectionCheck verify_graph_minor_bijection(const LabeledGraph& g) {
  const GraphFlatsLattice flats = graph_flats(g);
  const auto minors = enumerate_simple_labeled_minors(g);
  BijectionCheck out;
  out.lhs = minors.size();
  out.rhs = count_minors(flats.gl);

  auto describe = [](const LabeledGraph& h) {
    std::string s = h.partition().to_string() + " edges";
    for (auto [u, v] : h.edges()) s += " " + h.vertex_label(u) + "-" + h.vertex_label(v);
    return s;
  };

  std::set<MinorHandle> seen;
  for (const LabeledGraph& h : minors) {
    MinorHandle handle;
    try {
      handle = graph_minor_handle(flats, h);
    } catch (const InvariantError& e) {
      out.verdict = Verdict::fail("no handle for minor " + describe(h) + ": " + e.what());
      return out;
    }
    if (!seen.insert(handle).second) {
      out.verdict = Verdict::fail("two minors share handle " + to_string(handle, flats.gl.lattice()));
      return out;
    }
    if (graph_of_handle(flats, handle) != h) {
      out.verdict = Verdict::fail("inverse does not return minor " + describe(h));
      return out;
    }
    const Verdict same = same_labeled(graph_flats(h).gl, materialize(flats.gl, handle).gl);
    if (!same) {
      out.verdict = Verdict::fail("L(H) differs from its minor for " + describe(h) + ": " + same.witness);
      return out;
    }
  }
  if (seen.size() != out.rhs) {
    out.verdict = Verdict::fail("matched " + std::to_string(seen.size()) + " of " +
                                std::to_string(out.rhs) + " lattice minors");
    return out;
  }
  for_each_minor(flats.gl, [&](const MinorHandle& handle) {
    if (!out.verdict) return;
    if (graph_minor_handle(flats, graph_of_handle(flats, handle)) != handle) {
      out.verdict = Verdict::fail("handle " + to_string(handle, flats.gl.lattice()) +
                                  " does not round-trip through its graph");
    }
  });
  return out;
}

}  // namespace polylat
