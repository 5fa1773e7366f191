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

// Shared inputs for the unit tests.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polylat/genlattice.hpp"
#include "polylat/graphs.hpp"
#include "polylat/polymatroid.hpp"

namespace polylat::testing {

inline std::string data_path(const std::string& name) { return std::string(POLYLAT_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline Polymatroid table(std::size_t n, std::vector<Rational> ranks) {
  return Polymatroid(GroundSet::numbered(n), std::move(ranks));
}

// Ranks in subset-mask order over the ground set 1 2 3.
inline Polymatroid rank_three() { return table(3, {0, 1, 2, 2, 2, 3, 3, 3}); }
inline Polymatroid rank_two() { return table(3, {0, 1, 1, 2, 2, 2, 2, 2}); }

inline LabeledGraph triangle() { return LabeledGraph({"1", "2", "3"}, {{0, 1}, {0, 2}, {1, 2}}); }
// Triangle 123 with the pendant edge 34.
inline LabeledGraph triangle_tail() {
  return LabeledGraph({"1", "2", "3", "4"}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

inline std::vector<std::string> labels_of(const FinLattice& l, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (ElementId x : ids) out.push_back(l.label(x));
  return out;
}

}  // namespace polylat::testing
