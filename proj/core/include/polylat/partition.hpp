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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace polylat {

// A set partition of an ordered vertex set. Stored as a restricted growth
// string: block ids are numbered by first occurrence, so two partitions are
// equal exactly when their vectors are.
class Partition {
 public:
  Partition() = default;
  // `block_of[i]` is any block id for vertex i; ids are renumbered.
  Partition(std::vector<std::string> vertices, const std::vector<int>& block_of);

  static Partition discrete(std::vector<std::string> vertices);
  static Partition indiscrete(std::vector<std::string> vertices);
  // Parses "12/3/4" (single-character names) or "a,b/c" (general names).
  // Vertices missing from the text are an error.
  static Partition parse(std::vector<std::string> vertices, std::string_view text);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<int>& block_ids() const { return block_of_; }
  int block_of(std::size_t vertex) const { return block_of_[vertex]; }
  std::size_t block_count() const { return block_count_; }
  // Vertex indices per block, blocks ordered by their smallest vertex.
  std::vector<std::vector<std::size_t>> blocks() const;

  // Every block of *this lies inside a block of `other`.
  bool refines(const Partition& other) const;

  // "12/3/4" when every vertex name is one character, "a,b/c" otherwise.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.block_of_ <=> b.block_of_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<int> block_of_;
  std::size_t block_count_ = 0;
};

// Finest partition coarser than both. Throws MismatchError when the vertex
// lists differ.
Partition partition_join(const Partition& p, const Partition& q);

// Coarsest partition finer than both (blockwise intersection).
Partition partition_meet(const Partition& p, const Partition& q);

}  // namespace polylat
