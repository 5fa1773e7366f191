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

// Deletion and contraction of generator-enriched lattices.
//
// Every minor of (L, G) is <kept | apex> for an element apex of L and a set
// of elements apex v g (g in G, g not below apex). A MinorHandle stores that
// pair in the ids of the base lattice, so sequences of operations never
// materialize intermediate lattices and distinct handles are distinct minors.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polylat/genlattice.hpp"

namespace polylat {

struct MinorHandle {
  ElementId apex = 0;
  std::vector<ElementId> kept;  // sorted, ids in the base lattice

  friend bool operator==(const MinorHandle&, const MinorHandle&) = default;
  friend auto operator<=>(const MinorHandle&, const MinorHandle&) = default;
};

std::string to_string(const MinorHandle& h, const FinLattice& base);

// Tracks one minor of a fixed base GenLattice through a sequence of
// operations. Optionally carries a labeling of the generators by ground
// labels; each label points at its current generator, or at the current
// bottom once contracted into it.
class MinorBuilder {
 public:
  // Every generator labeled by its own element label.
  explicit MinorBuilder(const GenLattice& base);
  // Explicit labeling: ground label -> base generator (or the bottom).
  MinorBuilder(const GenLattice& base, std::map<std::string, ElementId> labeling);

  // Generator-indexed operations; ids are base ids of current generators.
  // Throws InvariantError if some id is not a current generator.
  void delete_generators(const std::vector<ElementId>& gens);
  void contract_generators(const std::vector<ElementId>& gens);
  void restrict_generators(const std::vector<ElementId>& gens);

  // Ground-indexed: acts on {g_x : x in labels}. Deletion removes those
  // generators even when other labels still point at them, and those labels
  // go with them. Throws InvariantError on an unknown label.
  void delete_ground(const std::vector<std::string>& labels);
  void contract_ground(const std::vector<std::string>& labels);
  void restrict_ground(const std::vector<std::string>& labels);

  // Element-indexed: acts on the current generators below `element`.
  void delete_at(ElementId element);
  void contract_at(ElementId element);

  const MinorHandle& handle() const { return handle_; }
  const std::map<std::string, ElementId>& labeling() const { return labeling_; }
  const GenLattice& base() const { return *base_; }
  Span materialize() const;

 private:
  void require_current(const std::vector<ElementId>& gens) const;
  std::vector<ElementId> resolve(const std::vector<std::string>& labels) const;

  const GenLattice* base_;
  MinorHandle handle_;
  std::map<std::string, ElementId> labeling_;
};

// The whole genlattice as a handle: (bottom, G).
MinorHandle whole(const GenLattice& gl);
Span materialize(const GenLattice& base, const MinorHandle& h);

// Single operations returning the resulting GenLattice. Generator sets are
// given as ids of gl.
GenLattice gl_delete(const GenLattice& gl, const std::vector<ElementId>& gens);
GenLattice gl_contract(const GenLattice& gl, const std::vector<ElementId>& gens);
GenLattice gl_restrict(const GenLattice& gl, const std::vector<ElementId>& gens);
GenLattice gl_delete_at(const GenLattice& gl, ElementId element);
GenLattice gl_contract_at(const GenLattice& gl, ElementId element);
GenLattice gl_delete_by_ground(const GenLattice& gl,
                               const std::map<std::string, ElementId>& labeling,
                               const std::vector<std::string>& labels);
GenLattice gl_contract_by_ground(const GenLattice& gl,
                                 const std::map<std::string, ElementId>& labeling,
                                 const std::vector<std::string>& labels);

// One step of a minor sequence.
struct MinorOp {
  enum class Kind { kDelete, kContract, kRestrict };
  // kGenerators: `names` are element labels of current generators.
  // kGround: `names` are ground labels of the labeling.
  // kElement: `names` holds one element label l; acts on gens below l.
  enum class Index { kGenerators, kGround, kElement };
  Kind kind = Kind::kDelete;
  Index index = Index::kGenerators;
  std::vector<std::string> names;
};

// Parses "delete:a,b", "contract:a", "restrict:a,b" (generator-indexed),
// the same with a "-ground" suffix on the verb, or "delete-at:l" and
// "contract-at:l". Throws InvariantError on malformed text.
MinorOp parse_minor_op(const std::string& text);

// Applies `ops` in order and returns the resulting handle.
MinorHandle minor_normal_form(const GenLattice& gl, const std::vector<MinorOp>& ops,
                              std::optional<std::map<std::string, ElementId>> labeling = std::nullopt);

// H_l = {l v g : g in G} \ {l}, sorted.
std::vector<ElementId> minor_generator_candidates(const GenLattice& gl, ElementId l);

// Visits every minor handle: apex in id order, then kept subsets of H_apex
// in increasing mask order.
void for_each_minor(const GenLattice& gl, const std::function<void(const MinorHandle&)>& fn);
std::vector<MinorHandle> enumerate_minors(const GenLattice& gl);
// Sum over l of 2^|H_l|, without enumerating.
std::uint64_t count_minors(const GenLattice& gl);

}  // namespace polylat
