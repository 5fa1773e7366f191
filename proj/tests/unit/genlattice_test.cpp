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
#include "polylat/genlattice.hpp"
#include "polylat/graphs.hpp"
#include "polylat/io.hpp"
#include "polylat/minors.hpp"
#include "polylat/verify.hpp"

namespace polylat {
namespace {

using testing::labels_of;
using testing::rank_three;
using testing::rank_two;

GenLattice load(const std::string& name) { return parse_genlattice(testing::read_data(name)); }

GenLattice trivial() { return GenLattice(FinLattice::from_covers({"0"}, {}), {}); }

std::size_t edge_count(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++n;
  return n;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(GenLattice, ValidExamples) {
  const GenLattice pentagon = load("pentagon.gl");
  EXPECT_TRUE(pentagon.minimally_generated());
  const GenLattice top = load("b2-top.gl");
  EXPECT_EQ(top.gens().size(), 3u);
  EXPECT_FALSE(top.minimally_generated());
  EXPECT_TRUE(trivial().minimally_generated());
}

TEST(GenLattice, RejectsBadGeneratingSets) {
  const FinLattice b2 = boolean_genlattice(2).lattice();
  try {
    GenLattice::from_labels(b2, {"{1}"});
    FAIL() << "expected InvariantError";
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("{2}"), std::string::npos) << e.what();
  }
  EXPECT_THROW(GenLattice(b2, {0, 1, 2}), InvariantError);
  EXPECT_THROW(GenLattice(b2, {1, 9}), InvariantError);
}

TEST(Diagram, EdgeCounts) {
  EXPECT_EQ(edge_count(diagram_dot(boolean_genlattice(2))), 4u);
  const std::string top = diagram_dot(load("b2-top.gl"));
  EXPECT_EQ(edge_count(top), 5u);
  EXPECT_NE(top.find("n0 -> n3"), std::string::npos);
  EXPECT_EQ(edge_count(diagram_dot(trivial())), 0u);
}

TEST(FlatsGenLattice, RankThree) {
  const FlatsGenLattice f = flats_genlattice(rank_three());
  EXPECT_EQ(f.gl().size(), 5u);
  EXPECT_EQ(sorted(labels_of(f.gl().lattice(), f.gl().gens())),
            (std::vector<std::string>{"{1,2}", "{1}", "{3}"}));
}

TEST(FlatsGenLattice, RankTwo) {
  const FlatsGenLattice f = flats_genlattice(rank_two());
  EXPECT_EQ(f.gl().size(), 4u);
  EXPECT_EQ(sorted(labels_of(f.gl().lattice(), f.gl().gens())),
            (std::vector<std::string>{"{1,2,3}", "{1}", "{2}"}));
}

TEST(FlatsGenLattice, ZeroPolymatroidIsTrivial) {
  const FlatsGenLattice f = flats_genlattice(Polymatroid::zero(GroundSet::numbered(3)));
  EXPECT_EQ(f.gl().size(), 1u);
  EXPECT_TRUE(f.gl().gens().empty());
  EXPECT_EQ(f.theta.assign(), (std::vector<ElementId>{0, 0, 0}));
}

TEST(StrongMap, IdentityIsAStrongBijection) {
  const GenLattice gl = load("pentagon.gl");
  std::vector<ElementId> id(gl.size());
  for (ElementId x = 0; x < gl.size(); ++x) id[x] = x;
  EXPECT_TRUE(is_strong_map(id, gl, gl));
  EXPECT_TRUE(is_injective(id));
  EXPECT_TRUE(is_surjective(id, gl, gl));
}

TEST(StrongMap, AtomsOfASquareOntoAChain) {
  const GenLattice b2 = boolean_genlattice(2);
  const GenLattice chain = chain_genlattice(2);
  const std::vector<ElementId> f{0, 1, 2, 2};
  EXPECT_TRUE(is_strong_map(f, b2, chain));
  EXPECT_FALSE(is_injective(f));
  EXPECT_TRUE(is_surjective(f, b2, chain));
}

TEST(StrongMap, GeneratorToNonGeneratorIsRejected) {
  const GenLattice b2 = boolean_genlattice(2);
  const std::vector<ElementId> f{0, 3, 3, 3};
  const Verdict v = is_strong_map(f, b2, b2);
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.witness.empty());
  const std::vector<ElementId> not_join_preserving{0, 1, 2, 1};
  EXPECT_FALSE(is_strong_map(not_join_preserving, b2, b2));
}

TEST(ClosureOfSurjection, Examples) {
  const FlatsGenLattice two = flats_genlattice(rank_two());
  EXPECT_EQ(closure_of_surjection(two.theta)(0b100), 0b111u);
  const FlatsGenLattice three = flats_genlattice(rank_three());
  EXPECT_EQ(closure_of_surjection(three.theta)(0b010), 0b011u);

  const StrongSurjection id = StrongSurjection::identity_on_generators(boolean_genlattice(3));
  const ClosureTable t = closure_of_surjection(id);
  for (SubsetMask x : subset_iter(t.ground)) EXPECT_EQ(t(x), x);
}

TEST(ClosureOfSurjection, MatchesThePolymatroidClosure) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Polymatroid p = random_polymatroid(rng, 5);
    EXPECT_EQ(closure_of_surjection(flats_genlattice(p).theta), closure_table(p));
  }
}

TEST(ClosureOfSurjection, ThetaPreservesJoinsAndInvertsPhi) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const GenLattice gl = random_genlattice(rng, 12, 6);
    const StrongSurjection t = random_surjection(rng, gl, gl.gens().size() + rng() % 2);
    const FinLattice& l = t.target().lattice();
    for (SubsetMask x : subset_iter(t.ground()))
      for (SubsetMask y : subset_iter(t.ground())) ASSERT_EQ(t(x | y), l.join(t(x), t(y)));
    // phi(l) is the union of the preimage of l.
    std::vector<SubsetMask> phi(l.size(), 0);
    for (SubsetMask x : subset_iter(t.ground())) phi[t(x)] |= x;
    for (ElementId e = 0; e < l.size(); ++e) EXPECT_EQ(t(phi[e]), e);
  }
}

TEST(Span, Examples) {
  const FinLattice b3 = boolean_genlattice(3).lattice();
  const std::vector<ElementId> atoms{*b3.find("{1}"), *b3.find("{2}")};
  const Span s = span(b3, atoms, b3.bottom());
  EXPECT_EQ(s.gl.lattice().labels(), (std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"}));
  EXPECT_EQ(s.gl.gens().size(), 2u);

  const FinLattice m3 = diamond_genlattice().lattice();
  const std::vector<ElementId> top{m3.top()};
  const Span chain = span(m3, top, *m3.find("g2"));
  EXPECT_EQ(chain.gl.lattice().labels(), (std::vector<std::string>{"g2", "1"}));
  EXPECT_EQ(chain.ambient_id, (std::vector<ElementId>{*m3.find("g2"), m3.top()}));

  const Span point = span(m3, {}, *m3.find("g1"));
  EXPECT_EQ(point.gl.size(), 1u);
  EXPECT_THROW(span(m3, top, m3.top()), InvariantError);
}

TEST(SurjectionMinors, ContractAndDelete) {
  const StrongSurjection t = flats_genlattice(rank_three()).theta;
  const StrongSurjection same = surjection_contract(t, 0);
  EXPECT_EQ(same.ground(), t.ground());
  EXPECT_EQ(same.target(), t.target());
  EXPECT_EQ(same.assign(), t.assign());

  const StrongSurjection c = surjection_contract(t, 0b001);
  const FinLattice& l = c.target().lattice();
  EXPECT_EQ(c.ground().labels(), (std::vector<std::string>{"2", "3"}));
  EXPECT_EQ(l.label(l.bottom()), "{1}");
  EXPECT_EQ(sorted(labels_of(l, c.target().gens())), (std::vector<std::string>{"{1,2,3}", "{1,2}"}));

  const StrongSurjection gone = surjection_delete(t, 0b111);
  EXPECT_EQ(gone.ground().size(), 0u);
  EXPECT_EQ(gone.target().size(), 1u);
}

TEST(GlMinors, DiamondOperationsDoNotCommute) {
  const GenLattice m3 = load("m3.gl");
  const FinLattice& l = m3.lattice();
  const ElementId g1 = *l.find("g1"), g2 = *l.find("g2");

  const GenLattice del_then_con = gl_contract(gl_delete(m3, {g1}), {*gl_delete(m3, {g1}).lattice().find("g2")});
  EXPECT_EQ(del_then_con.lattice().labels(), (std::vector<std::string>{"g2", "1"}));
  EXPECT_EQ(labels_of(del_then_con.lattice(), del_then_con.gens()), std::vector<std::string>{"1"});

  // Contracting g2 sends g1 to the top, so ground label g1 now names the top.
  std::map<std::string, ElementId> labeling{{"g1", g1}, {"g2", g2}, {"g3", *l.find("g3")}};
  MinorBuilder b(m3, labeling);
  b.contract_ground({"g2"});
  b.delete_ground({"g1"});
  const GenLattice con_then_del = b.materialize().gl;
  EXPECT_EQ(con_then_del.lattice().labels(), std::vector<std::string>{"g2"});
  EXPECT_FALSE(con_then_del == del_then_con);
}

TEST(GlMinors, DeletionInPartitionLatticeIsNotASublattice) {
  const GenLattice pi4 = partition_genlattice(4);
  const FinLattice& full = pi4.lattice();
  const GenLattice minor = gl_delete(pi4, {*full.find("13/2/4")});
  const FinLattice& l = minor.lattice();
  EXPECT_EQ(l.label(l.meet(*l.find("123/4"), *l.find("134/2"))), "1/2/3/4");
  EXPECT_EQ(full.label(full.meet(*full.find("123/4"), *full.find("134/2"))), "13/2/4");
}

TEST(GlMinors, EmptyOperationsChangeNothing) {
  const GenLattice gl = load("pentagon.gl");
  EXPECT_EQ(gl_contract(gl, {}), gl);
  EXPECT_EQ(gl_delete(gl, {}), gl);
  EXPECT_EQ(gl_restrict(gl, gl.gens()), gl);
}

TEST(GlMinors, IntervalsAreMinors) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const GenLattice gl = random_genlattice(rng, 14, 8);
    const FinLattice& l = gl.lattice();
    const ElementId a = static_cast<ElementId>(rng() % l.size());
    const ElementId b = l.join(a, static_cast<ElementId>(rng() % l.size()));
    MinorBuilder m(gl);
    m.contract_at(a);
    std::vector<ElementId> below;
    for (ElementId k : m.handle().kept)
      if (l.leq(k, b)) below.push_back(k);
    m.restrict_generators(below);
    std::vector<ElementId> got = m.materialize().ambient_id, interval;
    std::sort(got.begin(), got.end());
    for (ElementId x = 0; x < l.size(); ++x)
      if (l.leq(a, x) && l.leq(x, b)) interval.push_back(x);
    EXPECT_EQ(got, interval);
  }
}

TEST(Isomorphism, Examples) {
  const GenLattice k3 = graph_flats(testing::triangle()).gl;
  EXPECT_TRUE(gl_isomorphic(k3, partition_genlattice(3)).has_value());
  EXPECT_FALSE(gl_isomorphic(boolean_genlattice(2), load("b2-top.gl")).has_value());
  const GenLattice pentagon = load("pentagon.gl");
  const auto self = gl_isomorphic(pentagon, pentagon);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(*self, (std::vector<ElementId>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(gl_isomorphic(diamond_genlattice(), boolean_genlattice(2)).has_value());
  EXPECT_FALSE(gl_isomorphic(chain_genlattice(3), boolean_genlattice(2)).has_value());
}

TEST(Realize, Examples) {
  EXPECT_EQ(realize(boolean_genlattice(2)).ranks(), (std::vector<Rational>{0, 2, 2, 3}));
  EXPECT_EQ(realize(trivial()).size(), 0u);
  const Polymatroid top = realize(load("b2-top.gl"));
  EXPECT_EQ(top.ground().labels(), (std::vector<std::string>{"j", "k", "1"}));
  EXPECT_EQ(top.ranks(), (std::vector<Rational>{0, 2, 2, 3, 3, 3, 3, 3}));
}

TEST(Realize, FlatsRecoverTheGenLattice) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const GenLattice gl = random_genlattice(rng, 12, 8);
    const Polymatroid p = realize(gl);
    EXPECT_TRUE(validate(p).empty());
    EXPECT_TRUE(gl_isomorphic(flats_genlattice(p).gl(), gl).has_value());
  }
}

TEST(ComposeRank, Examples) {
  const StrongSurjection id = StrongSurjection::identity_on_generators(boolean_genlattice(2));
  const std::vector<Rational> cardinality{0, 1, 1, 2};
  EXPECT_EQ(compose_rank(id, cardinality).ranks(), cardinality);

  const StrongSurjection t = flats_genlattice(rank_two()).theta;
  const Weighting w = submodular_weighting(t.target().lattice());
  std::vector<Rational> integer(w.integer.begin(), w.integer.end());
  EXPECT_TRUE(same_closure(compose_rank(t, integer), rank_two()));

  const std::vector<Rational> constant(t.target().size(), 1);
  EXPECT_THROW(compose_rank(t, constant), InvariantError);
}

}  // namespace
}  // namespace polylat
