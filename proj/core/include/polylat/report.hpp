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

#include <cstdint>

#include "polylat/lattice.hpp"

namespace polylat {

// Result of checking that a map between two enumerated families is a
// bijection. `lhs` and `rhs` are the sizes of the two families, counted by
// independent code paths.
struct BijectionCheck {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  Verdict verdict;
};

}  // namespace polylat
