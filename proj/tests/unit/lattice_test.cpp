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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "polylat/error.hpp"
#include "polylat/families.hpp"
#include "polylat/lattice.hpp"
#include "polylat/verify.hpp"

namespace polylat {
namespace {

using testing::labels_of;

FinLattice pentagon() {
  return FinLattice::from_covers({"0", "g", "h", "i", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FinLattice hexagon() {
  return FinLattice::from_covers({"0", "a", "b", "c", "d", "1"},
                                 {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(FromCovers, BuildsTheHexagon) {
  const FinLattice l = hexagon();
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(l.label(l.bottom()), "0");
  EXPECT_EQ(l.label(l.top()), "1");
  const ElementId a = *l.find("a"), b = *l.find("b"), c = *l.find("c"), d = *l.find("d");
  EXPECT_EQ(l.join(a, c), l.top());
  EXPECT_EQ(l.meet(b, d), l.bottom());
  EXPECT_EQ(l.join(a, b), b);
  EXPECT_TRUE(l.covers(a, b));
  EXPECT_FALSE(l.covers(a, l.top()));
  EXPECT_EQ(l.height(l.top()), 3);
}

TEST(FromCovers, AcceptsNonCoverPairs) {
  const FinLattice l = FinLattice::from_covers({"0", "a", "1"}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(l.lower_covers(l.top()).size(), 1u);
}

TEST(FromCovers, RejectsCyclesAndAmbiguousJoins) {
  EXPECT_THROW(FinLattice::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), InvariantError);
  // a and b have two minimal upper bounds, c and d.
  EXPECT_THROW(FinLattice::from_covers({"0", "a", "b", "c", "d", "1"},
                                       {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}),
               InvariantError);
  // Two minimal elements and no bottom.
  EXPECT_THROW(FinLattice::from_covers({"a", "b", "1"}, {{0, 2}, {1, 2}}), InvariantError);
}

TEST(FromJoinTable, RejectsInvalidTables) {
  EXPECT_THROW(FinLattice::from_join_table({"0", "a"}, {0, 1, 0, 1}), InvariantError);
  EXPECT_THROW(FinLattice::from_join_table({"0", "a"}, {0, 1, 1}), InvariantError);
}

TEST(FromJoinTable, KeepsAGivenLinearExtension) {
  const FinLattice l = hexagon();
  std::vector<ElementId> table;
  for (ElementId x = 0; x < l.size(); ++x)
    for (ElementId y = 0; y < l.size(); ++y) table.push_back(l.join(x, y));
  EXPECT_EQ(FinLattice::from_join_table(l.labels(), table), l);
}

TEST(FromClosedSets, OrdersByInclusion) {
  const GroundSet g = GroundSet::numbered(3);
  const FinLattice l = FinLattice::from_closed_sets(g, {0b111, 0b000, 0b011, 0b001, 0b100});
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"{}", "{1}", "{3}", "{1,2}", "{1,2,3}"}));
  EXPECT_EQ(l.label(l.join(*l.find("{1}"), *l.find("{3}"))), "{1,2,3}");
  EXPECT_EQ(l.label(l.meet(*l.find("{1,2}"), *l.find("{3}"))), "{}");
}

TEST(FromClosedSets, RejectsFamiliesThatAreNotClosed) {
  const GroundSet g = GroundSet::numbered(3);
  EXPECT_THROW(FinLattice::from_closed_sets(g, {0b011, 0b110, 0b111}), InvariantError);
  EXPECT_THROW(FinLattice::from_closed_sets(g, {0b000, 0b001, 0b010}), InvariantError);
}

TEST(JoinSubsemilattice, TakesTheLeastElementAsBottom) {
  const FinLattice b3 = boolean_genlattice(3).lattice();
  const FinLattice sub = FinLattice::join_subsemilattice(
      b3, {*b3.find("{1}"), *b3.find("{1,2}"), *b3.find("{1,3}"), *b3.find("{1,2,3}")});
  EXPECT_EQ(sub.size(), 4u);
  EXPECT_EQ(sub.label(sub.bottom()), "{1}");
  EXPECT_EQ(sub.label(sub.top()), "{1,2,3}");
  EXPECT_THROW(FinLattice::join_subsemilattice(b3, {*b3.find("{1}"), *b3.find("{2}")}), InvariantError);
}

TEST(Relabeled, KeepsStructure) {
  const FinLattice l = pentagon();
  const FinLattice r = l.relabeled({"a", "b", "c", "d", "e"});
  EXPECT_EQ(r.size(), l.size());
  for (ElementId x = 0; x < l.size(); ++x)
    for (ElementId y = 0; y < l.size(); ++y) EXPECT_EQ(r.join(x, y), l.join(x, y));
  EXPECT_THROW(l.relabeled({"a", "a", "c", "d", "e"}), InvariantError);
}

TEST(Irreducibles, PentagonHasThreeNonzeroIrreducibles) {
  const FinLattice l = pentagon();
  EXPECT_EQ(sorted(labels_of(l, join_irreducibles(l))), (std::vector<std::string>{"g", "h", "i"}));
}

TEST(Irreducibles, MatchElementsWithOneLowerCover) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const FinLattice l = std::get<FinLattice>(random_instance({rng(), InstanceKind::kLattice, 16}));
    std::vector<ElementId> expected;
    for (ElementId x = 1; x < l.size(); ++x) {
      std::size_t below = 0;
      for (ElementId y = 0; y < l.size(); ++y) {
        if (!l.less(y, x)) continue;
        bool cover = true;
        for (ElementId z = 0; z < l.size(); ++z)
          if (l.less(y, z) && l.less(z, x)) cover = false;
        below += cover;
      }
      if (below == 1) expected.push_back(x);
    }
    EXPECT_EQ(join_irreducibles(l), expected);
  }
}

TEST(Properties, StandardExamples) {
  const FinLattice b3 = boolean_genlattice(3).lattice();
  const FinLattice m3 = diamond_genlattice().lattice();
  const FinLattice pi4 = partition_genlattice(4).lattice();
  const FinLattice n5 = pentagon();
  EXPECT_TRUE(is_geometric(b3));
  EXPECT_TRUE(is_distributive(b3));
  EXPECT_TRUE(is_geometric(m3));
  EXPECT_FALSE(is_distributive(m3));
  EXPECT_TRUE(is_geometric(pi4));
  EXPECT_FALSE(is_distributive(pi4));
  EXPECT_FALSE(is_semimodular(n5));
  EXPECT_FALSE(is_atomistic(n5));
  EXPECT_FALSE(is_distributive(n5));
  EXPECT_FALSE(is_geometric(hexagon()));
  EXPECT_TRUE(is_distributive(chain_genlattice(4).lattice()));
  EXPECT_FALSE(is_atomistic(chain_genlattice(2).lattice()));
}

TEST(Properties, FailuresCarryAWitness) {
  const Verdict v = is_distributive(diamond_genlattice().lattice());
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.witness.empty());
}

TEST(Weighting, ChainAndSquare) {
  const Weighting chain = submodular_weighting(chain_genlattice(2).lattice());
  EXPECT_EQ(chain.rational, (std::vector<Rational>{0, Rational(1, 2), Rational(3, 4)}));
  EXPECT_EQ(chain.integer, (std::vector<std::int64_t>{0, 2, 3}));
  EXPECT_EQ(chain.scale, 4);

  const Weighting square = submodular_weighting(boolean_genlattice(2).lattice());
  EXPECT_EQ(square.rational, (std::vector<Rational>{0, Rational(1, 2), Rational(1, 2), Rational(3, 4)}));
  EXPECT_EQ(square.integer, (std::vector<std::int64_t>{0, 2, 2, 3}));
}

TEST(Weighting, StrictlyOrderPreservingAndSubmodularOnRandomLattices) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const FinLattice l = std::get<FinLattice>(random_instance({rng(), InstanceKind::kLattice, 24}));
    const Weighting w = submodular_weighting(l);
    EXPECT_TRUE(check_strictly_order_preserving(l, w.rational));
    EXPECT_TRUE(check_submodular(l, w.rational));
    for (ElementId x = 0; x < l.size(); ++x) EXPECT_EQ(Rational(w.integer[x]), w.rational[x] * Rational(w.scale));
  }
}

TEST(Weighting, ChecksRejectBadWeights) {
  const FinLattice square = boolean_genlattice(2).lattice();
  const std::vector<Rational> flat{0, 1, 1, 1};
  EXPECT_FALSE(check_strictly_order_preserving(square, flat));
  const std::vector<Rational> supermodular{0, 1, 1, 3};
  EXPECT_TRUE(check_strictly_order_preserving(square, supermodular));
  EXPECT_FALSE(check_submodular(square, supermodular));
}

}  // namespace
}  // namespace polylat
