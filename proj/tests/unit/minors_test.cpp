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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "polylat/error.hpp"
#include "polylat/families.hpp"
#include "polylat/io.hpp"
#include "polylat/minors.hpp"
#include "polylat/partition.hpp"
#include "polylat/verify.hpp"

namespace polylat {
namespace {

using testing::labels_of;

MinorOp op(const std::string& text) { return parse_minor_op(text); }

TEST(ParseMinorOp, Verbs) {
  const MinorOp d = op("delete:a,b");
  EXPECT_EQ(d.kind, MinorOp::Kind::kDelete);
  EXPECT_EQ(d.index, MinorOp::Index::kGenerators);
  EXPECT_EQ(d.names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(op("contract-ground:1").index, MinorOp::Index::kGround);
  EXPECT_EQ(op("restrict:x").kind, MinorOp::Kind::kRestrict);
  const MinorOp at = op("contract-at:{1,2}");
  EXPECT_EQ(at.index, MinorOp::Index::kElement);
  EXPECT_EQ(at.names, std::vector<std::string>{"{1,2}"});
  EXPECT_EQ(op("delete:{1},{2}").names, (std::vector<std::string>{"{1}", "{2}"}));
  EXPECT_TRUE(op("delete:").names.empty());
}

TEST(ParseMinorOp, RejectsMalformedText) {
  EXPECT_THROW(op("delete"), InvariantError);
  EXPECT_THROW(op("erase:a"), InvariantError);
  EXPECT_THROW(op("delete-at:"), InvariantError);
  EXPECT_THROW(op("restrict-at:a"), InvariantError);
}

TEST(NormalForm, EmptySequenceIsTheWholeGenLattice) {
  const GenLattice gl = partition_genlattice(3);
  const MinorHandle h = minor_normal_form(gl, {});
  EXPECT_EQ(h, whole(gl));
  EXPECT_EQ(h.apex, gl.lattice().bottom());
  EXPECT_EQ(h.kept, gl.gens());
}

TEST(NormalForm, DiamondSequencesDisagree) {
  const GenLattice m3 = diamond_genlattice();
  const FinLattice& l = m3.lattice();
  const MinorHandle a = minor_normal_form(m3, {op("delete:g1"), op("contract:g2")});
  EXPECT_EQ(a.apex, *l.find("g2"));
  EXPECT_EQ(a.kept, std::vector<ElementId>{l.top()});
  EXPECT_EQ(to_string(a, l), "<1 | g2>");

  const MinorHandle b = minor_normal_form(m3, {op("contract-ground:g2"), op("delete-ground:g1")});
  EXPECT_EQ(b.apex, *l.find("g2"));
  EXPECT_TRUE(b.kept.empty());
  EXPECT_NE(a, b);
}

TEST(NormalForm, ContractingAnAtomOfPartitions) {
  const GenLattice pi4 = partition_genlattice(4);
  const FinLattice& l = pi4.lattice();
  const MinorHandle h = minor_normal_form(pi4, {op("contract:12/3/4")});
  EXPECT_EQ(l.label(h.apex), "12/3/4");

  // Independently: join 12/3/4 with every other atom, as partitions.
  const std::vector<std::string> v{"1", "2", "3", "4"};
  const Partition apex = Partition::parse(v, "12/3/4");
  std::set<std::string> expected;
  for (ElementId g : pi4.gens()) {
    const Partition j = partition_join(apex, Partition::parse(v, l.label(g)));
    if (j != apex) expected.insert(j.to_string());
  }
  const auto got = labels_of(l, h.kept);
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected);
  EXPECT_EQ(expected, (std::set<std::string>{"123/4", "124/3", "12/34"}));
}

TEST(NormalForm, UnknownGeneratorsAreRejected) {
  const GenLattice m3 = diamond_genlattice();
  EXPECT_THROW(minor_normal_form(m3, {op("delete:g1"), op("contract:g1")}), InvariantError);
  EXPECT_THROW(minor_normal_form(m3, {op("delete:1")}), InvariantError);
  EXPECT_THROW(minor_normal_form(m3, {op("delete-ground:g9")}), InvariantError);
}

// Applying contract-at(apex) and then restrict-to(kept) to the base
// reproduces the minor built by the original sequence.
TEST(NormalForm, ReplayReproducesTheMinor) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const GenLattice gl = random_genlattice(rng, 16, 8);
    MinorBuilder b(gl);
    for (int step = 0; step < 3; ++step) {
      const auto& current = b.handle().kept;
      std::vector<ElementId> pick;
      for (ElementId g : current)
        if (rng() % 3 == 0) pick.push_back(g);
      if (rng() % 2) {
        b.delete_generators(pick);
      } else {
        b.contract_generators(pick);
      }
    }
    const MinorHandle h = b.handle();
    MinorBuilder replay(gl);
    replay.contract_at(h.apex);
    replay.restrict_generators(h.kept);
    EXPECT_EQ(replay.handle(), h);
    EXPECT_EQ(replay.materialize().gl, b.materialize().gl);
  }
}

TEST(Enumerate, CountsOfStandardFamilies) {
  EXPECT_EQ(count_minors(boolean_genlattice(2)), 9u);
  EXPECT_EQ(count_minors(boolean_genlattice(3)), 27u);
  EXPECT_EQ(count_minors(boolean_genlattice(4)), 81u);
  EXPECT_EQ(count_minors(partition_genlattice(3)), 15u);
  EXPECT_EQ(count_minors(partition_genlattice(4)), 127u);
  EXPECT_EQ(count_minors(GenLattice(FinLattice::from_covers({"0"}, {}), {})), 1u);
}

TEST(Enumerate, OrderAndCountAgree) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const GenLattice gl = random_genlattice(rng, 16, 8);
    const auto all = enumerate_minors(gl);
    EXPECT_EQ(all.size(), count_minors(gl));
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LE(all[k - 1].apex, all[k].apex);
    EXPECT_EQ(std::set<MinorHandle>(all.begin(), all.end()).size(), all.size());
  }
}

TEST(Enumerate, DistinctHandlesGiveDistinctMinors) {
  const GenLattice pi4 = partition_genlattice(4);
  std::set<std::pair<std::vector<ElementId>, std::vector<ElementId>>> seen;
  for_each_minor(pi4, [&](const MinorHandle& h) {
    const Span s = materialize(pi4, h);
    std::vector<ElementId> gens;
    for (ElementId g : s.gl.gens()) gens.push_back(s.ambient_id[g]);
    EXPECT_TRUE(seen.emplace(s.ambient_id, gens).second) << to_string(h, pi4.lattice());
  });
  EXPECT_EQ(seen.size(), 127u);
}

TEST(Enumerate, MinorsOfGeometricGenLatticesStayGeometric) {
  for (const GenLattice& gl : {partition_genlattice(3), partition_genlattice(4), boolean_genlattice(4)}) {
    const FinLattice& l = gl.lattice();
    for_each_minor(gl, [&](const MinorHandle& h) {
      const Span s = materialize(gl, h);
      EXPECT_TRUE(s.gl.minimally_generated());
      EXPECT_TRUE(is_geometric(s.gl.lattice()));
      for (ElementId k : h.kept) EXPECT_TRUE(l.covers(h.apex, k));
    });
  }
}

TEST(Enumerate, EveryMinorIsAValidGenLattice) {
  const GenLattice gl = parse_genlattice(testing::read_data("pentagon.gl"));
  for_each_minor(gl, [&](const MinorHandle& h) {
    const Span s = materialize(gl, h);
    EXPECT_EQ(s.ambient_id.front(), h.apex);
    EXPECT_EQ(s.gl.gens().size(), h.kept.size());
  });
}

}  // namespace
}  // namespace polylat
