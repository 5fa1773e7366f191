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

// Vertex-labeled graphs, their cycle matroids, and the lattice of flats
// L(G) written as partitions of the original vertices.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polylat/genlattice.hpp"
#include "polylat/ground_set.hpp"
#include "polylat/minors.hpp"
#include "polylat/partition.hpp"
#include "polylat/polymatroid.hpp"
#include "polylat/report.hpp"

namespace polylat {

// A multigraph whose vertices are blocks of an underlying set of original
// vertex names. Edges are unlabeled; loops and parallel edges are allowed
// until simplify_graph removes them.
//
// The representation is canonical: blocks are ordered by their smallest
// original vertex, and edges are stored as sorted (low, high) pairs, so
// equal graphs compare equal member by member.
class LabeledGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  // One vertex per name.
  LabeledGraph(std::vector<std::string> names, std::vector<Edge> edges);
  // Vertices are the masks in `blocks`, which must partition `universe`.
  LabeledGraph(std::vector<std::string> universe, std::vector<SubsetMask> blocks,
               std::vector<Edge> edges);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<SubsetMask>& blocks() const { return blocks_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return blocks_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // "12" for the block {1,2} when names are single characters, "a,b"
  // otherwise.
  std::string vertex_label(std::size_t v) const;
  // The vertex blocks as a partition of the universe.
  Partition partition() const;
  // No loops and no parallel edges.
  bool is_simple() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<SubsetMask> blocks_;
  std::vector<Edge> edges_;
};

// |V| minus the number of connected components of (V, A). `a` is a mask
// over edge positions.
int graphic_rank(const LabeledGraph& g, SubsetMask a);

// Components of (V, A), as a partition of the universe.
Partition component_partition(const LabeledGraph& g, SubsetMask a);

// The cycle matroid as a polymatroid on edge labels "e1".."em".
// Throws InvariantError for more than kMaxGroundSize edges.
Polymatroid cycle_matroid(const LabeledGraph& g);

// L(G) of the simplification of g. Element labels are partition strings
// such as "12/3/4"; `partition[id]` and `flat[id]` describe each element
// (flats are edge masks of `simple`).
struct GraphFlatsLattice {
  GenLattice gl;
  std::vector<Partition> partition;
  std::vector<SubsetMask> flat;
  LabeledGraph simple;
};
GraphFlatsLattice graph_flats(const LabeledGraph& g);

// Contracts the edges in `contract` (merging endpoint blocks per component)
// and removes those in `remove`. Other edges survive, possibly as loops or
// parallel edges. Throws InvariantError if the two sets meet.
LabeledGraph graph_minor(const LabeledGraph& g, SubsetMask contract, SubsetMask remove);
// Drops loops and collapses parallel edges.
LabeledGraph simplify_graph(const LabeledGraph& g);

// Every distinct simple vertex-labeled minor of the simplification of g,
// sorted. Brute force over the 3^m edge fates, so limited to
// kMaxMinorEnumerationEdges edges.
inline constexpr std::size_t kMaxMinorEnumerationEdges = 15;
std::vector<LabeledGraph> enumerate_simple_labeled_minors(const LabeledGraph& g);

// The handle of L(g) that corresponds to a simple labeled minor h of g:
// apex is h's vertex partition, kept holds one merge per edge of h. Throws
// InvariantError if h is not such a minor.
MinorHandle graph_minor_handle(const GraphFlatsLattice& flats, const LabeledGraph& h);
// The inverse: the simple graph on the blocks of the apex with one edge per
// kept element.
LabeledGraph graph_of_handle(const GraphFlatsLattice& flats, const MinorHandle& h);

// Checks that H -> L(H) is a bijection between the simple labeled minors of
// g and the minors of L(g): both enumerations, forward and inverse maps, and
// equality of graph_flats(H) with the materialized minor.
BijectionCheck verify_graph_minor_bijection(const LabeledGraph& g);

}  // namespace polylat
