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
#include "oracles.hpp"

namespace geolattice {
namespace {

using oracle::Id;

TEST(DiamondProperty, Examples) {
  EXPECT_TRUE(DiamondProperty(BooleanLattice(3)).holds);
  EXPECT_TRUE(DiamondProperty(ChainLattice(3)).holds);

  const Lattice w6 = W6Lattice();
  const DiamondResult r = DiamondProperty(w6);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.failure->x, Id(w6, "a"));
  EXPECT_EQ(r.failure->y, Id(w6, "b"));
  EXPECT_EQ(r.failure->meet, Id(w6, "0"));
  EXPECT_EQ(r.failure->join, Id(w6, "1"));
  EXPECT_FALSE(r.failure->x_covered);
  EXPECT_TRUE(r.failure->y_covered);
  EXPECT_TRUE(IsValidDiamondFailure(w6, *r.failure));
}

TEST(DiamondProperty, InvalidFailureRejected) {
  const Lattice b3 = BooleanLattice(3);
  DiamondFailure f{1, 2, 0, 3, true, true};
  EXPECT_FALSE(IsValidDiamondFailure(b3, f));
}

TEST(SemimodularRank, Examples) {
  EXPECT_TRUE(SemimodularRank(PartitionLattice(3)).holds);
  const SemimodularResult w6 = SemimodularRank(W6Lattice());
  EXPECT_FALSE(w6.holds);
  EXPECT_FALSE(w6.graded);
  // N5 has maximal chains 0<a<c<1 and 0<b<1 of different lengths.
  EXPECT_FALSE(SemimodularRank(N5Lattice()).graded);
}

TEST(IsGeometric, NamedFamilies) {
  for (std::size_t n = 0; n <= 4; ++n) {
    EXPECT_TRUE(IsGeometric(BooleanLattice(n)).geometric) << "B" << n;
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_TRUE(IsGeometric(PartitionLattice(n)).geometric) << "Pi" << n;
  }
  EXPECT_TRUE(IsGeometric(BooleanLattice(6)).geometric);
}

TEST(IsGeometric, FailureReasons) {
  const Lattice w6 = W6Lattice();
  const GeometricReport w = IsGeometric(w6);
  EXPECT_FALSE(w.geometric);
  EXPECT_EQ(w.reason, GeometricReason::kDiamondFailure);
  EXPECT_EQ(w.diamond_failure->x, Id(w6, "a"));
  EXPECT_EQ(w.diamond_failure->y, Id(w6, "b"));

  const Lattice n5 = N5Lattice();
  const GeometricReport n = IsGeometric(n5);
  EXPECT_FALSE(n.geometric);
  EXPECT_EQ(n.reason, GeometricReason::kNotAtomic);
  EXPECT_EQ(*n.non_atomic_element, Id(n5, "c"));

  // A 3-chain is graded and semimodular but not atomic.
  const GeometricReport c = IsGeometric(ChainLattice(3));
  EXPECT_TRUE(c.semimodular);
  EXPECT_EQ(c.reason, GeometricReason::kNotAtomic);
}

// The diamond property and graded plus rank inequality agree on every
// lattice of at most 8 elements, and both match the definition-level oracle.
TEST(IsGeometric, RoutesAgreeWithOracleOnCorpus) {
  std::size_t two_atom_atomic = 0;
  for (const Lattice& lat : EnumerateLattices(8)) {
    const GeometricReport r = IsGeometric(lat);
    EXPECT_EQ(r.diamond, r.semimodular);
    EXPECT_EQ(r.semimodular, oracle::IsSemimodular(lat));
    EXPECT_EQ(r.geometric, oracle::IsGeometric(lat));
    if (r.diamond_failure) EXPECT_TRUE(IsValidDiamondFailure(lat, *r.diamond_failure));
    if (r.atomic && lat.atom_count() == 2) {
      // Atomic with two atoms forces the diamond B_2.
      ++two_atom_atomic;
      EXPECT_EQ(lat.size(), 4u);
      EXPECT_TRUE(r.geometric);
    }
  }
  EXPECT_EQ(two_atom_atomic, 1u);
}

}  // namespace
}  // namespace geolattice
