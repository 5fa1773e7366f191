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

// Seeded random instances and executable checks of the bijection and
// closure theorems, with line-oriented reports.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "polylat/genlattice.hpp"
#include "polylat/graphs.hpp"
#include "polylat/lattice.hpp"
#include "polylat/polymatroid.hpp"
#include "polylat/posets.hpp"
#include "polylat/report.hpp"

namespace polylat {

using Rng = std::mt19937_64;

enum class InstanceKind { kPolymatroid, kLattice, kGenLattice, kPoset, kGraph };

// `max_size` bounds the ground set (polymatroid), element count (lattice,
// genlattice, poset) or vertex count (graph).
struct RandomSpec {
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::kPolymatroid;
  std::size_t max_size = 4;
};

using Instance = std::variant<Polymatroid, FinLattice, GenLattice, Poset, LabeledGraph>;

// Equal specs give equal instances. Throws InvariantError when max_size is
// out of range for the kind.
Instance random_instance(const RandomSpec& spec);

// The lattice of unions of a few random subsets of a small set; at most
// max_elements elements (at least 1).
FinLattice random_lattice(Rng& rng, std::size_t max_elements);
// A random lattice with its irreducibles plus random extra generators,
// using at most max_gens generators in total.
GenLattice random_genlattice(Rng& rng, std::size_t max_elements, std::size_t max_gens);
// A surjection from "1".."n" hitting every generator; the remaining ground
// elements duplicate a generator or are loops. Requires n >= |G|.
StrongSurjection random_surjection(Rng& rng, const GenLattice& gl, std::size_t n);
// Integer weighting composed with a random surjection, on 1..max_ground
// elements. Valid by construction.
Polymatroid random_polymatroid(Rng& rng, std::size_t max_ground);
// Each forward pair i < j related with probability 1/2, on n elements.
Poset random_poset(Rng& rng, std::size_t n);
// Each vertex pair joined with probability 1/2, on vertices "1".."n".
LabeledGraph random_graph(Rng& rng, std::size_t n);

// A flat F with a union Y of parallel classes of p/F. Masks are over the
// ground set of p.
struct ParallelClosedPair {
  SubsetMask f = 0;
  SubsetMask y = 0;

  friend bool operator==(const ParallelClosedPair&, const ParallelClosedPair&) = default;
  friend auto operator<=>(const ParallelClosedPair&, const ParallelClosedPair&) = default;
};
// Flats in (cardinality, mask) order, then unions Y in increasing order of
// the class subset.
std::vector<ParallelClosedPair> enumerate_parallel_closed_pairs(const Polymatroid& p);

// Pair -> ((L,G)|_{Y u F})/F on the flats genlattice, and its inverse
// (K, H) -> (apex, {y : cl(y u apex) in H}); checks both compositions.
BijectionCheck verify_parallel_pairs_bijection(const Polymatroid& p);

// closure_table(p) equals the closure of the surjection onto its flats.
// lhs and rhs are the flat counts of the two closure operators.
BijectionCheck verify_closure_theorem(const Polymatroid& p);
// compose_rank(t, weighting) is a polymatroid whose closure table equals
// the closure of t.
BijectionCheck verify_closure_theorem(const StrongSurjection& t);

// For every disjoint X, Y: closure_table((p/X)\Y) equals the closure of
// (theta/X)\Y, theta the surjection onto the flats of p. lhs counts pairs,
// rhs counts agreeing pairs.
BijectionCheck verify_minor_closure(const Polymatroid& p);

// The all-pairs form r(X^Y) + r(XvY) <= r(X) + r(Y).
Verdict full_submodularity_check(const Polymatroid& p);
// The local check inside validate() against full_submodularity_check. lhs
// and rhs are 1 when the respective check accepts.
BijectionCheck verify_submodularity_equivalence(const Polymatroid& table);
// A random nonnegative table on n elements with r({}) = 0; about half are
// polymatroids, possibly perturbed in one entry.
Polymatroid random_rank_table(Rng& rng, std::size_t n);

// Both weightings from submodular_weighting are strictly order-preserving
// and submodular, scanning all pairs. lhs = rhs = lattice size on success.
BijectionCheck verify_weighting(const FinLattice& l);
// realize(gl) is a valid integer polymatroid whose flats genlattice is
// isomorphic to gl.
BijectionCheck verify_realization(const GenLattice& gl);
// Every minor of a geometric, minimally generated gl is again geometric
// and minimally generated, with generators covering the apex. lhs counts
// minors, rhs counts those that pass.
BijectionCheck verify_geometric_minors(const GenLattice& gl);

// One line per instance:
// theorem=<id> seed=<s> status=<pass|fail> lhs=<n> rhs=<n> ms=<t>
struct VerificationReport {
  std::string theorem;
  std::uint64_t seed = 0;
  std::string instance;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool pass = true;
  std::string witness;
  double ms = 0;
};
std::string format_report_line(const VerificationReport& r);
std::string format_summary(const std::vector<VerificationReport>& reports);

// Theorem ids accepted by run_suite, in display order.
const std::vector<std::string>& theorem_ids();

struct SuiteOptions {
  std::uint64_t first_seed = 1;
  std::size_t count = 100;
  std::size_t jobs = 1;
  // Instance size bound; 0 picks the theorem's default.
  std::size_t size = 0;
};
// Runs seeds first_seed .. first_seed+count-1 on up to `jobs` threads and
// returns the reports sorted by seed. Throws InvariantError on an unknown
// theorem id.
std::vector<VerificationReport> run_suite(const std::string& theorem, const SuiteOptions& options);
// One seeded instance of a suite.
VerificationReport run_instance(const std::string& theorem, std::uint64_t seed, std::size_t size = 0);

}  // namespace polylat
