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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polylat/ground_set.hpp"
#include "polylat/lattice.hpp"
#include "polylat/polymatroid.hpp"

namespace polylat {

// A finite lattice together with a join-generating set that avoids the
// bottom. Minimally generated when the generators are exactly the join
// irreducibles.
class GenLattice {
 public:
  // Throws InvariantError if the bottom is a generator, an id is out of
  // range, or some element is not a join of generators (witness included).
  GenLattice(FinLattice lattice, std::vector<ElementId> gens);
  // Generators given by label.
  static GenLattice from_labels(FinLattice lattice, const std::vector<std::string>& gen_labels);

  const FinLattice& lattice() const { return lattice_; }
  const std::vector<ElementId>& gens() const { return gens_; }
  bool is_gen(ElementId x) const { return is_gen_[x]; }
  std::size_t size() const { return lattice_.size(); }
  bool minimally_generated() const;

  friend bool operator==(const GenLattice& a, const GenLattice& b) {
    return a.lattice_ == b.lattice_ && a.gens_ == b.gens_;
  }

 private:
  FinLattice lattice_;
  std::vector<ElementId> gens_;
  std::vector<bool> is_gen_;
};

// A map from a ground set onto generators (or the bottom) of a GenLattice;
// it induces the join-preserving theta(X) = join of assign(x), x in X.
class StrongSurjection {
 public:
  // Throws InvariantError if an image is neither a generator nor the
  // bottom, or some generator is missed.
  StrongSurjection(GroundSet ground, GenLattice target, std::vector<ElementId> assign);

  // The surjection B_E -> (L, G) induced by the identity on G, with ground
  // labels taken from the generator labels.
  static StrongSurjection identity_on_generators(const GenLattice& gl);

  const GroundSet& ground() const { return ground_; }
  const GenLattice& target() const { return target_; }
  const std::vector<ElementId>& assign() const { return assign_; }
  ElementId operator()(SubsetMask x) const;

 private:
  GroundSet ground_;
  GenLattice target_;
  std::vector<ElementId> assign_;
};

// Lattice of flats with generators cl({e}) for non-loops e, and the
// surjection e -> cl({e}). `flat[id]` is the flat behind each element.
struct FlatsGenLattice {
  StrongSurjection theta;
  std::vector<SubsetMask> flat;

  const GenLattice& gl() const { return theta.target(); }
};
FlatsGenLattice flats_genlattice(const Polymatroid& p);

// Join-preserving (including f(bottom) = bottom) with generators sent to
// generators or the bottom. `f` is indexed by source element id.
Verdict is_strong_map(std::span<const ElementId> f, const GenLattice& src, const GenLattice& dst);
bool is_injective(std::span<const ElementId> f);
// f(G u {0}) = H u {0}.
bool is_surjective(std::span<const ElementId> f, const GenLattice& src, const GenLattice& dst);

// X -> phi(theta(X)) where phi(l) is the union of the preimage of l.
ClosureTable closure_of_surjection(const StrongSurjection& t);

// <H|z>: z together with all joins of nonempty subsets of H, computed in
// `ambient`, generated by H. `ambient_id` maps result ids back.
struct Span {
  GenLattice gl;
  std::vector<ElementId> ambient_id;
};
// Throws InvariantError unless z < h for every h in H.
Span span(const FinLattice& ambient, std::span<const ElementId> h, ElementId z);

StrongSurjection surjection_delete(const StrongSurjection& t, SubsetMask x);
StrongSurjection surjection_contract(const StrongSurjection& t, SubsetMask x);

// A strong bijection a -> b (indexed by a's ids), if one exists. Exact
// backtracking over generator images with join-closure propagation.
std::optional<std::vector<ElementId>> gl_isomorphic(const GenLattice& a, const GenLattice& b);

// r o theta. Throws InvariantError (with witness) unless w is strictly
// order-preserving, submodular, and zero on the bottom.
Polymatroid compose_rank(const StrongSurjection& t, std::span<const Rational> w);

// Integer polymatroid on the generators whose genlattice of flats is
// isomorphic to gl: X -> integer weighting of the join of X.
Polymatroid realize(const GenLattice& gl);

}  // namespace polylat
