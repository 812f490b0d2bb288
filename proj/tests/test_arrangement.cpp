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

#include "geolattice/arrangement.hpp"
#include "geolattice/catalog.hpp"
#include "geolattice/enumerate.hpp"
#include "geolattice/geometric.hpp"
#include "oracles.hpp"

namespace geolattice {
namespace {

using oracle::KindOf;

RationalMatrix Ints(const std::vector<std::vector<int>>& rows) {
  RationalMatrix out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (int v : r) row.emplace_back(v);
    out.push_back(row);
  }
  return out;
}

// Random arrangement of `count` pairwise non-parallel nonzero normals.
CentralArrangement RandomArrangement(std::mt19937& rng, std::size_t dim,
                                     std::size_t count) {
  std::uniform_int_distribution<int> coef(-3, 3);
  while (true) {
    std::vector<IntVector> normals;
    for (std::size_t i = 0; i < count; ++i) {
      IntVector v(dim);
      for (auto& c : v) c = coef(rng);
      normals.push_back(v);
    }
    try {
      return CentralArrangement(dim, normals);
    } catch (const Error&) {
    }
  }
}

TEST(ReducedRowEchelon, CanonicalForRowSpace) {
  const RationalMatrix a = ReducedRowEchelon(Ints({{2, 4, 0}, {1, 2, 1}}));
  const RationalMatrix b = ReducedRowEchelon(Ints({{1, 2, 1}, {0, 0, 3}, {3, 6, 3}}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, Ints({{1, 2, 0}, {0, 0, 1}}));
}

TEST(NullSpace, Basis) {
  const RationalMatrix ns = NullSpace(Ints({{1, -1, 0}}), 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(v[0] - v[1], 0);
  EXPECT_EQ(NullSpace({}, 2).size(), 2u);
}

TEST(CentralArrangement, Validation) {
  EXPECT_EQ(KindOf([] { CentralArrangement(2, {{1, 0, 0}}); }),
            ErrorKind::kDimensionMismatch);
  EXPECT_EQ(KindOf([] { CentralArrangement(2, {{0, 0}}); }),
            ErrorKind::kInvalidArrangement);
  EXPECT_EQ(KindOf([] { CentralArrangement(2, {{1, 2}, {-2, -4}}); }),
            ErrorKind::kDuplicateHyperplane);
  EXPECT_EQ(KindOf([] { CentralArrangement(0, {}); }), ErrorKind::kInvalidArrangement);
}

TEST(IntersectionLattice, CoordinateIsBoolean) {
  const IntersectionLattice il = BuildIntersectionLattice(CoordinateArrangement(3));
  EXPECT_TRUE(Isomorphic(il.lattice.poset(), BooleanLattice(3).poset()));
  EXPECT_EQ(il.lattice.name(il.lattice.bottom()), "{}");
  EXPECT_EQ(il.lattice.name(il.lattice.top()), "{0,1,2}");
  EXPECT_TRUE(il.subspace[il.lattice.top()].empty());
}

TEST(IntersectionLattice, BraidIsPartition) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const IntersectionLattice il = BuildIntersectionLattice(BraidArrangement(n));
    EXPECT_TRUE(Isomorphic(il.lattice.poset(), PartitionLattice(n).poset())) << n;
  }
}

TEST(IntersectionLattice, SingleHyperplane) {
  const IntersectionLattice il = BuildIntersectionLattice(CentralArrangement(3, {{1, 1, 1}}));
  EXPECT_EQ(il.lattice.size(), 2u);
  EXPECT_EQ(il.subspace[il.lattice.top()].size(), 2u);
}

TEST(RegionCount, Examples) {
  EXPECT_EQ(RegionCount(CoordinateArrangement(3)), 8u);
  EXPECT_EQ(RegionCount(BraidArrangement(3)), 6u);
  EXPECT_EQ(RegionCount(CentralArrangement(3, {{1, 1, 1}})), 2u);
  EXPECT_EQ(RegionCount(CentralArrangement(2, {{1, 0}, {1, 1}})), 4u);
}

TEST(RegionOracle, Examples) {
  EXPECT_EQ(RegionOracle(CentralArrangement(1, {{1}})), 2u);
  EXPECT_EQ(RegionOracle(CentralArrangement(2, {{1, 0}, {0, 1}})), 4u);
  EXPECT_EQ(RegionOracle(BraidArrangement(3)), 6u);
  EXPECT_EQ(RegionOracle(CoordinateArrangement(3)), 8u);
}

// Closed forms: the coordinate arrangement in Q^n has 2^n chambers and the
// braid arrangement n!.
TEST(RegionCount, ClosedForms) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(RegionCount(CoordinateArrangement(n)), 1u << n);
  }
  std::uint64_t fact = 1;
  for (std::size_t n = 2; n <= 5; ++n) {
    fact *= n;
    EXPECT_EQ(RegionCount(BraidArrangement(n)), fact);
    EXPECT_EQ(RegionOracle(BraidArrangement(n)), fact);
  }
}

// Generic lines through the origin of Q^2: k lines give 2k chambers.
TEST(RegionCount, LinesInThePlane) {
  std::vector<IntVector> normals;
  for (int k = 1; k <= 6; ++k) {
    normals.push_back({1, k});
    const CentralArrangement arr(2, normals);
    EXPECT_EQ(RegionCount(arr), 2u * normals.size());
    EXPECT_EQ(RegionOracle(arr), 2u * normals.size());
  }
}

// Property: formula and oracle agree on seeded random arrangements, and every
// intersection lattice is geometric.
TEST(RegionCount, MatchesOracleOnRandomArrangements) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + rng() % 4;
    const std::size_t count = 1 + rng() % (dim == 1 ? 1 : 5);
    const CentralArrangement arr = RandomArrangement(rng, dim, count);
    EXPECT_TRUE(IsGeometric(BuildIntersectionLattice(arr).lattice).geometric);
    EXPECT_EQ(RegionCount(arr), RegionOracle(arr)) << "trial " << trial;
  }
}

TEST(RegionOracle, BudgetExceeded) {
  std::vector<IntVector> normals;
  for (int k = 0; k <= static_cast<int>(kMaxOracleHyperplanes); ++k) normals.push_back({1, k});
  EXPECT_EQ(KindOf([&] { RegionOracle(CentralArrangement(2, normals)); }),
            ErrorKind::kBudgetExceeded);
}

}  // namespace
}  // namespace geolattice
