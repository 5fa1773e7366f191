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

#include "polylat/families.hpp"

#include <map>
#include <string>
#include <vector>

#include "polylat/error.hpp"
#include "polylat/partition.hpp"

namespace polylat {
namespace {

// Restricted growth strings of length n: every set partition once.
void growth_strings(std::size_t n, std::vector<int>& prefix, int blocks,
                    std::vector<std::vector<int>>& out) {
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    prefix.push_back(b);
    growth_strings(n, prefix, std::max(blocks, b + 1), out);
    prefix.pop_back();
  }
}

}  // namespace

GenLattice boolean_genlattice(std::size_t n) {
  const GroundSet ground = GroundSet::numbered(n);
  std::vector<SubsetMask> all;
  for (SubsetMask x : subset_iter(ground)) all.push_back(x);
  FinLattice l = FinLattice::from_closed_sets(ground, std::move(all));
  auto atoms = l.atoms();
  return GenLattice(std::move(l), std::move(atoms));
}

GenLattice partition_genlattice(std::size_t n) {
  if (n > 7) throw InvariantError("partition lattices are limited to 7 points");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<int>> strings;
  std::vector<int> prefix;
  growth_strings(n, prefix, 0, strings);
  std::vector<Partition> parts;
  std::map<Partition, ElementId> index;
  for (const auto& s : strings) {
    index.emplace(Partition(names, s), static_cast<ElementId>(parts.size()));
    parts.emplace_back(names, s);
  }
  const std::size_t m = parts.size();
  std::vector<ElementId> join(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(parts[a].to_string());
    for (std::size_t b = 0; b < m; ++b) join[a * m + b] = index.at(partition_join(parts[a], parts[b]));
  }
  FinLattice l = FinLattice::from_join_table(std::move(labels), std::move(join));
  auto atoms = l.atoms();
  return GenLattice(std::move(l), std::move(atoms));
}

GenLattice diamond_genlattice() {
  FinLattice l = FinLattice::from_covers({"0", "g1", "g2", "g3", "1"},
                                         {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto atoms = l.atoms();
  return GenLattice(std::move(l), std::move(atoms));
}

GenLattice chain_genlattice(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (std::size_t i = 0; i <= k; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(static_cast<ElementId>(i - 1), static_cast<ElementId>(i));
  }
  FinLattice l = FinLattice::from_covers(std::move(labels), covers);
  std::vector<ElementId> gens;
  for (ElementId x = 1; x < l.size(); ++x) gens.push_back(x);
  return GenLattice(std::move(l), std::move(gens));
}

}  // namespace polylat
