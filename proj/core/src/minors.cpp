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

#include "polylat/minors.hpp"

#include <algorithm>

#include "polylat/error.hpp"

namespace polylat {
namespace {

void sort_unique(std::vector<ElementId>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Splits on commas that are not inside braces, so "{1,2},{3}" has two parts.
std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (const auto& s : out) {
    if (s.empty()) throw InvariantError("empty name in minor operation '" + text + "'");
  }
  return out;
}

}  // namespace

std::string to_string(const MinorHandle& h, const FinLattice& base) {
  std::string out = "<";
  for (std::size_t i = 0; i < h.kept.size(); ++i) {
    if (i) out += ' ';
    out += base.label(h.kept[i]);
  }
  return out + " | " + base.label(h.apex) + ">";
}

MinorBuilder::MinorBuilder(const GenLattice& base) : base_(&base), handle_(whole(base)) {
  for (ElementId g : base.gens()) labeling_.emplace(base.lattice().label(g), g);
}

MinorBuilder::MinorBuilder(const GenLattice& base, std::map<std::string, ElementId> labeling)
    : base_(&base), handle_(whole(base)), labeling_(std::move(labeling)) {
  for (const auto& [name, x] : labeling_) {
    if (x >= base.size() || (x != base.lattice().bottom() && !base.is_gen(x))) {
      throw InvariantError("label " + name + " does not point at a generator");
    }
  }
}

void MinorBuilder::require_current(const std::vector<ElementId>& gens) const {
  for (ElementId g : gens) {
    if (!std::binary_search(handle_.kept.begin(), handle_.kept.end(), g)) {
      throw InvariantError("not a generator of the current minor: " +
                           (g < base_->size() ? base_->lattice().label(g) : std::to_string(g)));
    }
  }
}

void MinorBuilder::delete_generators(const std::vector<ElementId>& gens) {
  require_current(gens);
  auto& kept = handle_.kept;
  kept.erase(std::remove_if(kept.begin(), kept.end(),
                            [&](ElementId k) {
                              return std::find(gens.begin(), gens.end(), k) != gens.end();
                            }),
             kept.end());
  std::erase_if(labeling_, [&](const auto& entry) {
    return std::find(gens.begin(), gens.end(), entry.second) != gens.end();
  });
}

void MinorBuilder::contract_generators(const std::vector<ElementId>& gens) {
  require_current(gens);
  const FinLattice& l = base_->lattice();
  ElementId i0 = handle_.apex;
  for (ElementId g : gens) i0 = l.join(i0, g);
  std::vector<ElementId> next;
  for (ElementId k : handle_.kept) {
    ElementId y = l.join(k, i0);
    if (y != i0) next.push_back(y);
  }
  sort_unique(next);
  handle_ = {i0, std::move(next)};
  for (auto& [name, x] : labeling_) x = l.join(x, i0);
}

void MinorBuilder::restrict_generators(const std::vector<ElementId>& gens) {
  require_current(gens);
  std::vector<ElementId> drop;
  for (ElementId k : handle_.kept) {
    if (std::find(gens.begin(), gens.end(), k) == gens.end()) drop.push_back(k);
  }
  delete_generators(drop);
}

std::vector<ElementId> MinorBuilder::resolve(const std::vector<std::string>& labels) const {
  std::vector<ElementId> out;
  for (const auto& name : labels) {
    auto it = labeling_.find(name);
    if (it == labeling_.end()) throw InvariantError("unknown ground label '" + name + "'");
    if (it->second != handle_.apex) out.push_back(it->second);
  }
  sort_unique(out);
  return out;
}

void MinorBuilder::delete_ground(const std::vector<std::string>& labels) {
  auto gens = resolve(labels);
  delete_generators(gens);
  for (const auto& name : labels) labeling_.erase(name);
}

void MinorBuilder::contract_ground(const std::vector<std::string>& labels) {
  auto gens = resolve(labels);
  contract_generators(gens);
  for (const auto& name : labels) labeling_.erase(name);
}

void MinorBuilder::restrict_ground(const std::vector<std::string>& labels) {
  resolve(labels);  // validates the names
  std::vector<std::string> others;
  for (const auto& [name, x] : labeling_) {
    if (std::find(labels.begin(), labels.end(), name) == labels.end()) others.push_back(name);
  }
  delete_ground(others);
}

void MinorBuilder::delete_at(ElementId element) {
  std::vector<ElementId> below;
  for (ElementId k : handle_.kept)
    if (base_->lattice().leq(k, element)) below.push_back(k);
  delete_generators(below);
}

void MinorBuilder::contract_at(ElementId element) {
  std::vector<ElementId> below;
  for (ElementId k : handle_.kept)
    if (base_->lattice().leq(k, element)) below.push_back(k);
  contract_generators(below);
}

Span MinorBuilder::materialize() const { return polylat::materialize(*base_, handle_); }

MinorHandle whole(const GenLattice& gl) { return {gl.lattice().bottom(), gl.gens()}; }

Span materialize(const GenLattice& base, const MinorHandle& h) {
  return span(base.lattice(), h.kept, h.apex);
}

GenLattice gl_delete(const GenLattice& gl, const std::vector<ElementId>& gens) {
  MinorBuilder b(gl);
  b.delete_generators(gens);
  return b.materialize().gl;
}

GenLattice gl_contract(const GenLattice& gl, const std::vector<ElementId>& gens) {
  MinorBuilder b(gl);
  b.contract_generators(gens);
  return b.materialize().gl;
}

GenLattice gl_restrict(const GenLattice& gl, const std::vector<ElementId>& gens) {
  MinorBuilder b(gl);
  b.restrict_generators(gens);
  return b.materialize().gl;
}

GenLattice gl_delete_at(const GenLattice& gl, ElementId element) {
  MinorBuilder b(gl);
  b.delete_at(element);
  return b.materialize().gl;
}

GenLattice gl_contract_at(const GenLattice& gl, ElementId element) {
  MinorBuilder b(gl);
  b.contract_at(element);
  return b.materialize().gl;
}

GenLattice gl_delete_by_ground(const GenLattice& gl,
                               const std::map<std::string, ElementId>& labeling,
                               const std::vector<std::string>& labels) {
  MinorBuilder b(gl, labeling);
  b.delete_ground(labels);
  return b.materialize().gl;
}

GenLattice gl_contract_by_ground(const GenLattice& gl,
                                 const std::map<std::string, ElementId>& labeling,
                                 const std::vector<std::string>& labels) {
  MinorBuilder b(gl, labeling);
  b.contract_ground(labels);
  return b.materialize().gl;
}

MinorOp parse_minor_op(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InvariantError("minor operation must look like verb:names, got '" + text + "'");
  }
  const std::string verb = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  MinorOp op;
  using Kind = MinorOp::Kind;
  using Index = MinorOp::Index;
  if (verb == "delete") {
    op = {Kind::kDelete, Index::kGenerators, {}};
  } else if (verb == "contract") {
    op = {Kind::kContract, Index::kGenerators, {}};
  } else if (verb == "restrict") {
    op = {Kind::kRestrict, Index::kGenerators, {}};
  } else if (verb == "delete-ground") {
    op = {Kind::kDelete, Index::kGround, {}};
  } else if (verb == "contract-ground") {
    op = {Kind::kContract, Index::kGround, {}};
  } else if (verb == "restrict-ground") {
    op = {Kind::kRestrict, Index::kGround, {}};
  } else if (verb == "delete-at") {
    op = {Kind::kDelete, Index::kElement, {rest}};
  } else if (verb == "contract-at") {
    op = {Kind::kContract, Index::kElement, {rest}};
  } else {
    throw InvariantError("unknown minor operation '" + verb + "'");
  }
  if (op.index == Index::kElement) {
    if (rest.empty()) throw InvariantError("missing element in '" + text + "'");
  } else {
    op.names = split_names(rest);
  }
  return op;
}

MinorHandle minor_normal_form(const GenLattice& gl, const std::vector<MinorOp>& ops,
                              std::optional<std::map<std::string, ElementId>> labeling) {
  MinorBuilder b = labeling ? MinorBuilder(gl, std::move(*labeling)) : MinorBuilder(gl);
  auto element = [&](const std::string& name) {
    auto id = gl.lattice().find(name);
    if (!id) throw InvariantError("unknown element '" + name + "'");
    return *id;
  };
  for (const MinorOp& op : ops) {
    using Kind = MinorOp::Kind;
    switch (op.index) {
      case MinorOp::Index::kGenerators: {
        std::vector<ElementId> gens;
        for (const auto& name : op.names) gens.push_back(element(name));
        if (op.kind == Kind::kDelete) b.delete_generators(gens);
        if (op.kind == Kind::kContract) b.contract_generators(gens);
        if (op.kind == Kind::kRestrict) b.restrict_generators(gens);
        break;
      }
      case MinorOp::Index::kGround:
        if (op.kind == Kind::kDelete) b.delete_ground(op.names);
        if (op.kind == Kind::kContract) b.contract_ground(op.names);
        if (op.kind == Kind::kRestrict) b.restrict_ground(op.names);
        break;
      case MinorOp::Index::kElement:
        if (op.names.size() != 1) throw InvariantError("element-indexed operation needs one element");
        if (op.kind == Kind::kDelete) b.delete_at(element(op.names[0]));
        if (op.kind == Kind::kContract) b.contract_at(element(op.names[0]));
        if (op.kind == Kind::kRestrict) throw InvariantError("restrict-at is not an operation");
        break;
    }
  }
  return b.handle();
}

std::vector<ElementId> minor_generator_candidates(const GenLattice& gl, ElementId l) {
  std::vector<ElementId> out;
  for (ElementId g : gl.gens()) {
    ElementId y = gl.lattice().join(l, g);
    if (y != l) out.push_back(y);
  }
  sort_unique(out);
  return out;
}

void for_each_minor(const GenLattice& gl, const std::function<void(const MinorHandle&)>& fn) {
  for (ElementId l = 0; l < gl.size(); ++l) {
    const auto h = minor_generator_candidates(gl, l);
    if (h.size() >= 63) throw OverflowError("too many minors to enumerate at " + gl.lattice().label(l));
    MinorHandle handle{l, {}};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.size()); ++mask) {
      handle.kept.clear();
      for (std::size_t i = 0; i < h.size(); ++i)
        if ((mask >> i) & 1) handle.kept.push_back(h[i]);
      fn(handle);
    }
  }
}

std::vector<MinorHandle> enumerate_minors(const GenLattice& gl) {
  std::vector<MinorHandle> out;
  for_each_minor(gl, [&](const MinorHandle& h) { out.push_back(h); });
  return out;
}

std::uint64_t count_minors(const GenLattice& gl) {
  std::uint64_t total = 0;
  for (ElementId l = 0; l < gl.size(); ++l) {
    const auto k = minor_generator_candidates(gl, l).size();
    if (k >= 63 || __builtin_add_overflow(total, std::uint64_t{1} << k, &total)) {
      throw OverflowError("minor count exceeds 64 bits");
    }
  }
  return total;
}

}  // namespace polylat
