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

// Standard small lattices used as fixtures and benchmarks.

#pragma once

#include <cstddef>

#include "polylat/genlattice.hpp"

namespace polylat {

// B_n: subsets of {1..n} labeled "{1,2}", generated by the atoms.
GenLattice boolean_genlattice(std::size_t n);
// Pi_n: partitions of {1..n} labeled "12/3", generated by the atoms.
GenLattice partition_genlattice(std::size_t n);
// M_3: "0" < "g1", "g2", "g3" < "1", generated by the three atoms.
GenLattice diamond_genlattice();
// The chain "0" < "1" < ... < "k", generated by its nonzero elements.
GenLattice chain_genlattice(std::size_t k);

}  // namespace polylat
