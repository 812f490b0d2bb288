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
#include <map>
#include <numeric>
#include <random>

#include "geolattice/catalog.hpp"
#include "geolattice/enumerate.hpp"
#include "oracles.hpp"

namespace geolattice {
namespace {

// Rebuilds `p` with element ids permuted by `perm` (new id of old x is
// perm[x]).
Poset Relabel(const Poset& p, const std::vector<Element>& perm) {
  std::vector<std::string> names(p.size());
  for (Element x = 0; x < p.size(); ++x) names[perm[x]] = p.name(x);
  std::vector<CoverPair> covers;
  for (const auto& [u, v] : p.cover_pairs()) covers.emplace_back(perm[u], perm[v]);
  return Poset::Build(std::move(names), covers);
}

// Isomorphism by trying every bijection.
bool BruteIsomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < a.size() && ok; ++x) {
      for (Element y = 0; y < a.size() && ok; ++y) {
        ok = a.Leq(x, y) == b.Leq(perm[x], perm[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(EnumerateLattices, PublishedCounts) {
  const std::map<std::size_t, std::size_t> expected{
      {1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 5}, {6, 15}, {7, 53}, {8, 222}, {9, 1078}};
  std::map<std::size_t, std::size_t> got;
  for (const Lattice& lat : EnumerateLattices(9)) ++got[lat.size()];
  EXPECT_EQ(got, expected);
}

TEST(EnumerateLattices, SmallCases) {
  EXPECT_TRUE(EnumerateLattices(0).empty());
  const auto one = EnumerateLattices(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].name(0), "0");

  std::vector<std::string> canon;
  for (const Lattice& lat : EnumerateLattices(4)) {
    if (lat.size() == 4) canon.push_back(CanonicalForm(lat.poset()));
  }
  ASSERT_EQ(canon.size(), 2u);
  const std::string chain = CanonicalForm(ChainLattice(4).poset());
  const std::string diamond = CanonicalForm(BooleanLattice(2).poset());
  EXPECT_TRUE((canon[0] == chain && canon[1] == diamond) ||
              (canon[0] == diamond && canon[1] == chain));
}

TEST(EnumerateLattices, RejectsOversizedRequest) {
  EXPECT_EQ(oracle::KindOf([] { EnumerateLattices(kMaxEnumerationElements + 1); }),
            ErrorKind::kBudgetExceeded);
}

TEST(EnumerateLattices, CorpusContainsW6) {
  const std::string w6 = CanonicalForm(W6Lattice().poset());
  std::size_t hits = 0;
  for (const Lattice& lat : EnumerateLattices(6)) {
    hits += CanonicalForm(lat.poset()) == w6;
  }
  EXPECT_EQ(hits, 1u);
}

// Property: canonical forms ignore element ids.
TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(5);
  for (const Lattice& lat : EnumerateLattices(8)) {
    std::vector<Element> perm(lat.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(CanonicalForm(lat.poset()), CanonicalForm(Relabel(lat.poset(), perm)));
  }
  const Lattice p4 = PartitionLattice(4);
  std::vector<Element> perm(p4.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  EXPECT_TRUE(Isomorphic(p4.poset(), Relabel(p4.poset(), perm)));
  EXPECT_FALSE(Isomorphic(p4.poset(), BooleanLattice(4).poset()));
}

// Property: corpus members of equal size are pairwise non-isomorphic, decided
// by brute force over all bijections.
TEST(EnumerateLattices, PairwiseNonIsomorphic) {
  const auto lattices = EnumerateLattices(7);
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    for (std::size_t j = i + 1; j < lattices.size(); ++j) {
      const Poset& a = lattices[i].poset();
      const Poset& b = lattices[j].poset();
      if (a.size() != b.size() || a.cover_pairs().size() != b.cover_pairs().size()) {
        continue;
      }
      EXPECT_FALSE(BruteIsomorphic(a, b)) << i << " vs " << j;
    }
  }
}

TEST(EnumerateAndVerify, CorpusAgrees) {
  const CorpusReport r = EnumerateAndVerify(6);
  EXPECT_EQ(r.total, 1u + 1 + 1 + 2 + 5 + 15);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_GE(r.atomic_non_geometric, 1u);
  for (const CorpusEntry& e : r.entries) {
    if (!e.atomic) {
      EXPECT_FALSE(e.agreement.has_value());
    } else {
      EXPECT_EQ(e.agreement, true);
      EXPECT_EQ(e.witness_verified, !e.geometric);
    }
  }
  EXPECT_EQ(EnumerateAndVerify(1).geometric, 1u);
}

}  // namespace
}  // namespace geolattice
