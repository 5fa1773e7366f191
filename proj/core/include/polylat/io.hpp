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

// Text formats and Graphviz output.
//
//   .pm   elements: 1 2 3
//         rank {} = 0
//         rank {1,2} = 3/2          (one line for each of the 2^n subsets)
//   .g    vertices: 1 2 3 4
//         block 1 2                 (optional: names forming one vertex)
//         edge 1 3                  (any name of each endpoint block)
//   .pos  elements: a b c
//         cover a < b
//   .gl   elements: 0 a b 1
//         cover 0 < a
//         generators: a b
//
// Blank lines and lines starting with '#' are ignored. Parsers throw
// ParseError naming the line (and column when it is meaningful).

#pragma once

#include <string>
#include <string_view>

#include "polylat/genlattice.hpp"
#include "polylat/graphs.hpp"
#include "polylat/lattice.hpp"
#include "polylat/polymatroid.hpp"
#include "polylat/posets.hpp"

namespace polylat {

Polymatroid parse_polymatroid(std::string_view text);
std::string print_polymatroid(const Polymatroid& p);

LabeledGraph parse_graph(std::string_view text);
std::string print_graph(const LabeledGraph& g);

Poset parse_poset(std::string_view text);
std::string print_poset(const Poset& p);

GenLattice parse_genlattice(std::string_view text);
std::string print_genlattice(const GenLattice& gl);

// Hasse diagram, bottom to top, elements in id order.
std::string hasse_dot(const FinLattice& l);
// One edge per distinct pair (l, l v g) with l v g != l, in id order, each
// labeled by the generators producing it.
std::string diagram_dot(const GenLattice& gl);
// Undirected graph with block labels.
std::string graph_dot(const LabeledGraph& g);

}  // namespace polylat
