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
#include <vector>

#include "fixtures.hpp"
#include "polylat/error.hpp"
#include "polylat/polymatroid.hpp"
#include "polylat/verify.hpp"

namespace polylat {
namespace {

using testing::rank_three;
using testing::rank_two;
using testing::table;

// Closure straight from the definition, one element at a time.
SubsetMask naive_closure(const Polymatroid& p, SubsetMask x) {
  SubsetMask out = x;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p.rank(x | singleton(e)) == p.rank(x)) out |= singleton(e);
  }
  return out;
}

bool naive_submodular(const Polymatroid& p) {
  for (SubsetMask a : subset_iter(p.ground())) {
    for (SubsetMask b : subset_iter(p.ground())) {
      if (p.rank(a) + p.rank(b) < p.rank(a | b) + p.rank(a & b)) return false;
    }
  }
  return true;
}

TEST(Validate, AcceptsTheExamples) {
  EXPECT_TRUE(validate(rank_three()).empty());
  EXPECT_TRUE(validate(rank_two()).empty());
  EXPECT_TRUE(validate(table(2, {0, 1, 1, Rational(3, 2)})).empty());
  EXPECT_TRUE(validate(Polymatroid::zero(GroundSet::numbered(4))).empty());
}

TEST(Validate, ReportsEachKindOfViolation) {
  const auto nonzero = validate(table(1, {1, 1}));
  ASSERT_FALSE(nonzero.empty());
  EXPECT_EQ(nonzero.front().kind, AxiomViolation::Kind::kNormalization);

  const auto decreasing = validate(table(2, {0, 2, 2, 1}));
  ASSERT_FALSE(decreasing.empty());
  EXPECT_EQ(decreasing.front().kind, AxiomViolation::Kind::kMonotonicity);
  EXPECT_EQ(describe(decreasing.front(), GroundSet::numbered(2)), "monotonicity: rank {1} > rank {1,2}");

  const auto supermodular = validate(table(2, {0, 1, 1, 3}));
  ASSERT_EQ(supermodular.size(), 1u);
  EXPECT_EQ(supermodular.front().kind, AxiomViolation::Kind::kSubmodularity);
  EXPECT_EQ(supermodular.front().base, 0u);
}

TEST(Validate, LocalSubmodularityAgreesWithTheFullCheck) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Polymatroid p = random_rank_table(rng, 1 + rng() % 4);
    const auto violations = validate(p);
    const bool local = std::none_of(violations.begin(), violations.end(), [](const AxiomViolation& v) {
      return v.kind == AxiomViolation::Kind::kSubmodularity;
    });
    EXPECT_EQ(local, naive_submodular(p));
  }
}

TEST(Polymatroid, RejectsWrongTableSize) {
  EXPECT_THROW(table(2, {0, 1, 1}), InvariantError);
}

TEST(Closure, RankThreeExample) {
  const Polymatroid p = rank_three();
  const GroundSet& g = p.ground();
  EXPECT_EQ(closure(p, g.parse("{2}")), g.parse("{1,2}"));
  EXPECT_EQ(closure(p, g.parse("{1}")), g.parse("{1}"));
  EXPECT_EQ(closure(p, g.parse("{3}")), g.parse("{3}"));
  EXPECT_EQ(closure(p, g.parse("{2,3}")), g.full());
}

TEST(Closure, RankTwoExample) {
  const Polymatroid p = rank_two();
  const GroundSet& g = p.ground();
  EXPECT_EQ(closure(p, g.parse("{3}")), g.full());
  EXPECT_EQ(closure(p, g.parse("{1,2}")), g.full());
  EXPECT_EQ(closure(p, g.parse("{2}")), g.parse("{2}"));
}

TEST(Closure, TableMatchesTheDefinitionAndIsAClosureOperator) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Polymatroid p = std::get<Polymatroid>(random_instance({rng(), InstanceKind::kPolymatroid, 5}));
    const ClosureTable t = closure_table(p);
    EXPECT_FALSE(t.invariant_violation().has_value());
    for (SubsetMask x : subset_iter(p.ground())) EXPECT_EQ(t(x), naive_closure(p, x));
  }
}

TEST(Closure, FlatsInCardinalityOrder) {
  const auto flats = closure_table(rank_three()).flats();
  EXPECT_EQ(flats, (std::vector<SubsetMask>{0b000, 0b001, 0b100, 0b011, 0b111}));
  EXPECT_EQ(closure_table(rank_two()).flats(), (std::vector<SubsetMask>{0b000, 0b001, 0b010, 0b111}));
  EXPECT_EQ(closure_table(Polymatroid::zero(GroundSet::numbered(3))).flats(), std::vector<SubsetMask>{0b111});
}

TEST(Closure, InvariantViolationNamesTheProblem) {
  ClosureTable t{GroundSet::numbered(1), {0, 0}};
  ASSERT_TRUE(t.invariant_violation().has_value());
}

TEST(Structure, LoopsAndParallelClasses) {
  // 1 is a loop; 2 and 3 are parallel; 4 is on its own.
  const Polymatroid p = table(4, {0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2});
  ASSERT_TRUE(validate(p).empty());
  EXPECT_EQ(loops(p), 0b0001u);
  EXPECT_EQ(parallel_classes(p), (std::vector<SubsetMask>{0b0110, 0b1000}));
  EXPECT_FALSE(is_simple(p));
  EXPECT_TRUE(is_simple(rank_three()));
  EXPECT_TRUE(is_simple(rank_two()));

  const Simplification s = simplify(p);
  EXPECT_EQ(s.simple.ground().labels(), (std::vector<std::string>{"2", "4"}));
  EXPECT_EQ(s.simple.ranks(), (std::vector<Rational>{0, 1, 1, 2}));
  EXPECT_EQ(s.classes.at("2"), 0b0110u);
  EXPECT_EQ(s.classes.at("4"), 0b1000u);
  EXPECT_TRUE(is_simple(s.simple));
}

TEST(Structure, ZeroPolymatroidIsAllLoops) {
  const Polymatroid z = Polymatroid::zero(GroundSet::numbered(3));
  EXPECT_EQ(loops(z), 0b111u);
  EXPECT_TRUE(parallel_classes(z).empty());
  EXPECT_EQ(simplify(z).simple.size(), 0u);
}

TEST(Minors, DeleteAndContractValues) {
  const Polymatroid p = rank_three();
  const Polymatroid contracted = contract_set(p, p.ground().parse("{1}"));
  EXPECT_EQ(contracted.ground().labels(), (std::vector<std::string>{"2", "3"}));
  EXPECT_EQ(contracted.ranks(), (std::vector<Rational>{0, 1, 2, 2}));
  const Polymatroid deleted = delete_set(p, p.ground().parse("{3}"));
  EXPECT_EQ(deleted.ground().labels(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(deleted.ranks(), (std::vector<Rational>{0, 1, 2, 2}));
  EXPECT_EQ(delete_set(p, 0), p);
  EXPECT_EQ(contract_set(p, 0), p);
}

TEST(Minors, DeletionAndContractionStayPolymatroids) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Polymatroid p = std::get<Polymatroid>(random_instance({rng(), InstanceKind::kPolymatroid, 5}));
    const SubsetMask x = static_cast<SubsetMask>(rng()) & p.ground().full();
    EXPECT_TRUE(validate(delete_set(p, x)).empty());
    EXPECT_TRUE(validate(contract_set(p, x)).empty());
  }
}

TEST(SameClosure, ScalingKeepsTheClosure) {
  const Polymatroid p = rank_three();
  std::vector<Rational> doubled;
  for (const Rational& r : p.ranks()) doubled.push_back(r * Rational(2));
  EXPECT_TRUE(same_closure(p, Polymatroid(p.ground(), doubled)));
  EXPECT_FALSE(same_closure(rank_three(), rank_two()));
  EXPECT_THROW(same_closure(p, Polymatroid::zero(GroundSet::numbered(2))), MismatchError);
}

}  // namespace
}  // namespace polylat
