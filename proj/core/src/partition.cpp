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

#include "polylat/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polylat/error.hpp"

namespace polylat {
namespace {

bool single_char_names(const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Partition::Partition(std::vector<std::string> vertices,
                     const std::vector<int>& block_of)
    : vertices_(std::move(vertices)) {
  if (block_of.size() != vertices_.size()) {
    throw InvariantError("partition assigns " + std::to_string(block_of.size()) +
                         " blocks for " + std::to_string(vertices_.size()) +
                         " vertices");
  }
  std::map<int, int> renumber;
  block_of_.reserve(block_of.size());
  for (int b : block_of) {
    auto [it, inserted] = renumber.emplace(b, static_cast<int>(renumber.size()));
    block_of_.push_back(it->second);
  }
  block_count_ = renumber.size();
}

Partition Partition::discrete(std::vector<std::string> vertices) {
  std::vector<int> ids(vertices.size());
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(vertices), ids);
}

Partition Partition::indiscrete(std::vector<std::string> vertices) {
  std::vector<int> ids(vertices.size(), 0);
  return Partition(std::move(vertices), ids);
}

Partition Partition::parse(std::vector<std::string> vertices, std::string_view text) {
  const bool compact = single_char_names(vertices) && text.find(',') == std::string_view::npos;
  std::vector<int> ids(vertices.size(), -1);
  int block = 0;
  auto assign = [&](std::string_view name) {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) {
      throw InvariantError("unknown vertex '" + std::string(name) + "' in partition");
    }
    auto idx = static_cast<std::size_t>(it - vertices.begin());
    if (ids[idx] != -1) {
      throw InvariantError("vertex '" + std::string(name) + "' appears twice in partition");
    }
    ids[idx] = block;
  };
  while (true) {
    auto slash = text.find('/');
    std::string_view part = text.substr(0, slash);
    if (part.empty()) throw InvariantError("empty block in partition");
    if (compact) {
      for (std::size_t i = 0; i < part.size(); ++i) assign(part.substr(i, 1));
    } else {
      while (true) {
        auto comma = part.find(',');
        assign(part.substr(0, comma));
        if (comma == std::string_view::npos) break;
        part.remove_prefix(comma + 1);
      }
    }
    ++block;
    if (slash == std::string_view::npos) break;
    text.remove_prefix(slash + 1);
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == -1) {
      throw InvariantError("vertex '" + vertices[i] + "' missing from partition");
    }
  }
  return Partition(std::move(vertices), ids);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(i);
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (vertices_ != other.vertices_) {
    throw MismatchError("partitions over different vertex sets");
  }
  std::vector<int> target(block_count_, -1);
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    int& t = target[block_of_[i]];
    if (t == -1) {
      t = other.block_of_[i];
    } else if (t != other.block_of_[i]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  const bool compact = single_char_names(vertices_);
  std::string out;
  for (const auto& block : blocks()) {
    if (!out.empty()) out += '/';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k && !compact) out += ',';
      out += vertices_[block[k]];
    }
  }
  return out;
}

Partition partition_join(const Partition& p, const Partition& q) {
  if (p.vertices() != q.vertices()) {
    throw MismatchError("partition_join: partitions over different vertex sets");
  }
  const std::size_t n = p.vertices().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Partition* part : {&p, &q}) {
    std::vector<std::size_t> first(part->block_count(), n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t& f = first[part->block_of(i)];
      if (f == n) {
        f = i;
      } else {
        parent[find_root(parent, i)] = find_root(parent, f);
      }
    }
  }
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(find_root(parent, i));
  return Partition(p.vertices(), ids);
}

Partition partition_meet(const Partition& p, const Partition& q) {
  if (p.vertices() != q.vertices()) {
    throw MismatchError("partition_meet: partitions over different vertex sets");
  }
  std::vector<int> ids(p.vertices().size());
  const int stride = static_cast<int>(q.block_count());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = p.block_of(i) * stride + q.block_of(i);
  }
  return Partition(p.vertices(), ids);
}

}  // namespace polylat
