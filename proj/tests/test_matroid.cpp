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

#include "geolattice/catalog.hpp"
#include "geolattice/enumerate.hpp"
#include "geolattice/geometric.hpp"
#include "geolattice/matroid.hpp"
#include "oracles.hpp"

namespace geolattice {
namespace {

using oracle::KindOf;

TEST(MatroidClosure, BooleanIsFree) {
  const MatroidClosure cl = MatroidClosure::FromLattice(BooleanLattice(3));
  for (AtomSet w = 0; w < 8; ++w) EXPECT_EQ(cl(w), w);
  const SimplicialComplex in = IndependenceComplex(cl);
  EXPECT_EQ(in.facets(), (std::vector<AtomSet>{0b111}));
  EXPECT_EQ(in.rank(), 3);
  EXPECT_TRUE(in.pure());
}

TEST(MatroidClosure, Pi3IsUniform23) {
  const MatroidClosure cl = MatroidClosure::FromLattice(PartitionLattice(3));
  EXPECT_EQ(cl(0b011), 0b111u);
  const SimplicialComplex in = IndependenceComplex(cl);
  EXPECT_EQ(in.facets(), (std::vector<AtomSet>{0b011, 0b101, 0b110}));
  EXPECT_EQ(in.rank(), 2);
  EXPECT_TRUE(in.pure());
}

TEST(MatroidClosure, W6BreaksExchange) {
  const Lattice w6 = W6Lattice();
  const MatroidClosure cl = MatroidClosure::FromLattice(w6);
  EXPECT_FALSE(CheckClosureAxioms(cl));
  const auto bad = FindExchangeViolation(cl);
  ASSERT_TRUE(bad);
  // Independent check of the reported triple.
  const AtomSet a = AtomSet{1} << bad->a, b = AtomSet{1} << bad->b;
  EXPECT_EQ(cl(bad->w) & a, 0u);
  EXPECT_NE(cl(bad->w | b) & a, 0u);
  EXPECT_EQ(cl(bad->w | a) & b, 0u);
  EXPECT_FALSE(IndependenceComplex(cl).facets().empty());
}

TEST(MatroidClosure, Errors) {
  EXPECT_EQ(KindOf([] { MatroidClosure::FromLattice(N5Lattice()); }), ErrorKind::kNotAtomic);
}

TEST(CheckClosureAxioms, DetectsEachAxiom) {
  // cl({0}) = {}.
  const auto e = CheckClosureAxioms(MatroidClosure::FromTable(1, {0b0, 0b0}));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->axiom, "extensive");
  // cl({0}) = {0,2} is not inside cl({0,1}) = {0,1}.
  const auto m = CheckClosureAxioms(MatroidClosure::FromTable(
      3, {0b000, 0b101, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111}));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->axiom, "monotone");
  EXPECT_EQ(m->w, 0b001u);
  EXPECT_EQ(m->v, 0b011u);
  // cl({0}) = {0,1} but cl({0,1}) = {0,1,2}.
  const auto i = CheckClosureAxioms(MatroidClosure::FromTable(
      3, {0b000, 0b011, 0b010, 0b111, 0b100, 0b111, 0b110, 0b111}));
  ASSERT_TRUE(i);
  EXPECT_EQ(i->axiom, "idempotent");
  EXPECT_EQ(i->w, 0b001u);
}

TEST(SimplicialComplex, KeepsMaximalFaces) {
  const SimplicialComplex c = SimplicialComplex::FromFacets(3, {0b001, 0b011, 0b100});
  EXPECT_EQ(c.facets(), (std::vector<AtomSet>{0b011, 0b100}));
  EXPECT_FALSE(c.pure());
  EXPECT_EQ(c.rank(), 2);
}

TEST(VertexOrderShelling, Examples) {
  const SimplicialComplex simplex = SimplicialComplex::FromFacets(3, {0b111});
  EXPECT_EQ(ShellAllVertexOrders(simplex).failures, 0u);

  const SimplicialComplex u23 = SimplicialComplex::FromFacets(3, {0b011, 0b101, 0b110});
  const ShellingSweep s = ShellAllVertexOrders(u23);
  EXPECT_EQ(s.orders_tested, 6u);
  EXPECT_EQ(s.failures, 0u);

  // Two disjoint edges.
  const SimplicialComplex split = SimplicialComplex::FromFacets(4, {0b0011, 0b1100});
  const ShellingSweep t = ShellAllVertexOrders(split);
  EXPECT_EQ(t.orders_tested, 24u);
  EXPECT_EQ(t.failures, 24u);
  ASSERT_TRUE(t.first_failure);
  EXPECT_EQ(t.first_failure->failing_facet, 1u);
  EXPECT_EQ(t.first_failure->witness_face, 0u);
}

TEST(VertexOrderShelling, RejectsNonPure) {
  const SimplicialComplex c = SimplicialComplex::FromFacets(3, {0b011, 0b100});
  const std::vector<std::size_t> order{0, 1, 2};
  EXPECT_EQ(KindOf([&] { VertexOrderShelling(c, order); }), ErrorKind::kNotPure);
}

// Geometric corpus lattices give matroids whose independence complexes shell
// under every vertex order; atomic non-geometric ones break exchange.
TEST(MatroidBridge, HoldsOnCorpus) {
  for (const Lattice& lat : EnumerateLattices(8)) {
    if (!oracle::IsAtomic(lat)) continue;
    const MatroidClosure cl = MatroidClosure::FromLattice(lat);
    EXPECT_FALSE(CheckClosureAxioms(cl));
    if (oracle::IsGeometric(lat)) {
      EXPECT_FALSE(FindExchangeViolation(cl));
      const SimplicialComplex in = IndependenceComplex(cl);
      EXPECT_TRUE(in.pure());
      // Facet size equals the lattice rank.
      EXPECT_EQ(in.rank(), IsGeometric(lat).rank[lat.top()]);
      EXPECT_EQ(ShellAllVertexOrders(in, 1).failures, 0u);
    } else {
      EXPECT_TRUE(FindExchangeViolation(cl));
    }
    // Flats are exactly the atom supports of lattice elements.
    std::size_t flats = 0;
    for (AtomSet w = 0; w < (AtomSet{1} << cl.ground_size()); ++w) flats += cl(w) == w;
    EXPECT_EQ(flats, lat.size());
  }
}

}  // namespace
}  // namespace geolattice
