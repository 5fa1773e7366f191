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

#include "polylat/ground_set.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "polylat/error.hpp"

namespace polylat {

SubsetMask compress(SubsetMask set, SubsetMask keep) {
  SubsetMask out = 0;
  int pos = 0;
  for (SubsetMask k = keep; k; k &= k - 1) {
    int bit = std::countr_zero(k);
    if (contains(set, bit)) out |= singleton(pos);
    ++pos;
  }
  return out;
}

SubsetMask expand(SubsetMask set, SubsetMask keep) {
  SubsetMask out = 0;
  int pos = 0;
  for (SubsetMask k = keep; k; k &= k - 1) {
    int bit = std::countr_zero(k);
    if (contains(set, pos)) out |= singleton(bit);
    ++pos;
  }
  return out;
}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' ||
           c == '{' || c == '}' || c == '=' || c == '#' || c == '<';
  });
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGroundSize) {
    throw InvariantError("ground set has " + std::to_string(labels_.size()) +
                         " elements; at most " + std::to_string(kMaxGroundSize) +
                         " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!is_valid_label(l)) throw InvariantError("invalid element label '" + l + "'");
    if (!seen.insert(l).second) throw InvariantError("duplicate element label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

GroundSet GroundSet::restrict_to(SubsetMask keep) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (contains(keep, i)) out.push_back(labels_[i]);
  }
  return GroundSet(std::move(out));
}

std::string GroundSet::format(SubsetMask set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!contains(set, i)) continue;
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  return out + "}";
}

SubsetMask GroundSet::parse(std::string_view text) const {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw InvariantError("subset must be written as {a,b,...}: '" +
                         std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  SubsetMask out = 0;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view name = text.substr(0, comma);
    auto idx = index_of(name);
    if (!idx) throw InvariantError("unknown element '" + std::string(name) + "'");
    if (contains(out, *idx)) {
      throw InvariantError("element '" + std::string(name) + "' repeated in subset");
    }
    out |= singleton(*idx);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw InvariantError("trailing comma in subset");
  }
  return out;
}

}  // namespace polylat
