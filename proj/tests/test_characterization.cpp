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
#include "geolattice/characterization.hpp"
#include "geolattice/enumerate.hpp"
#include "oracles.hpp"

namespace geolattice {
namespace {

using oracle::Id;
using oracle::KindOf;

TEST(AllOrderingsEl, B3AllPass) {
  const OrderingsResult r = AllOrderingsEl(BooleanLattice(3));
  EXPECT_EQ(r.verdicts.size(), 6u);
  EXPECT_TRUE(r.all_pass());
}

TEST(AllOrderingsEl, Pi3AllPass) {
  const OrderingsResult r = AllOrderingsEl(PartitionLattice(3));
  EXPECT_EQ(r.verdicts.size(), 6u);
  EXPECT_TRUE(r.all_pass());
}

TEST(AllOrderingsEl, W6VectorMatchesOracle) {
  const Lattice w6 = W6Lattice();
  const OrderingsResult r = AllOrderingsEl(w6);
  ASSERT_EQ(r.verdicts.size(), 6u);
  EXPECT_FALSE(r.verdicts[0].passes);  // (a,b,c)
  for (const auto& v : r.verdicts) {
    EXPECT_EQ(v.passes, oracle::IsEl(w6, oracle::GammaFromSequence(v.ordering)));
  }
  ASSERT_TRUE(r.first_failing_index);
  EXPECT_EQ(*r.first_failing_index, 0u);
}

TEST(AllOrderingsEl, ThreadCountDoesNotChangeResult) {
  const Lattice w6 = W6Lattice();
  const OrderingsResult one = AllOrderingsEl(w6, {40320, kDefaultChainBudget, 1});
  const OrderingsResult four = AllOrderingsEl(w6, {40320, kDefaultChainBudget, 4});
  ASSERT_EQ(one.verdicts.size(), four.verdicts.size());
  for (std::size_t i = 0; i < one.verdicts.size(); ++i) {
    EXPECT_EQ(one.verdicts[i].ordering, four.verdicts[i].ordering);
    EXPECT_EQ(one.verdicts[i].passes, four.verdicts[i].passes);
  }
}

TEST(AllOrderingsEl, Errors) {
  EXPECT_EQ(KindOf([] { AllOrderingsEl(N5Lattice()); }), ErrorKind::kNotAtomic);
  EXPECT_EQ(KindOf([] { AllOrderingsEl(BooleanLattice(4), {10}); }),
            ErrorKind::kBudgetExceeded);
}

TEST(ConstructWitness, W6Certificate) {
  const Lattice w6 = W6Lattice();
  const WitnessCertificate c = ConstructWitness(w6, *DiamondProperty(w6).failure);
  EXPECT_EQ(c.a_x, Id(w6, "a"));
  EXPECT_EQ(c.a_y, Id(w6, "b"));
  EXPECT_EQ(c.ordering, (std::vector<Element>{Id(w6, "a"), Id(w6, "b"), Id(w6, "c")}));
  EXPECT_EQ(ChainNames(w6, c.lex_min_chain.chain),
            (std::vector<std::string>{"0", "a", "d", "1"}));
  EXPECT_EQ(c.lex_min_chain.labels, (LabelSequence{1, 3, 2}));
  EXPECT_EQ(c.lex_min_chain.descent_position, 2u);
  EXPECT_EQ(c.interval_status, IntervalStatus::kNoRisingChain);
  EXPECT_TRUE(WitnessViolations(w6, c).empty());
}

TEST(ConstructWitness, OrientsFailureSoXIsNotCovered) {
  const Lattice w6 = W6Lattice();
  DiamondFailure swapped = *DiamondProperty(w6).failure;
  std::swap(swapped.x, swapped.y);
  std::swap(swapped.x_covered, swapped.y_covered);
  const WitnessCertificate c = ConstructWitness(w6, swapped);
  EXPECT_EQ(c.failure.x, Id(w6, "a"));
  EXPECT_FALSE(c.failure.x_covered);
}

TEST(ConstructWitness, RejectsInvalidFailure) {
  const Lattice b3 = BooleanLattice(3);
  EXPECT_EQ(KindOf([&] { ConstructWitness(b3, DiamondFailure{1, 2, 0, 3, true, true}); }),
            ErrorKind::kValidationError);
}

TEST(Characterize, B4Both) {
  const CharacterizationReport r = Characterize(BooleanLattice(4), Mode::kBoth);
  EXPECT_TRUE(r.geometric);
  ASSERT_TRUE(r.orderings);
  EXPECT_EQ(r.orderings->verdicts.size(), 24u);
  EXPECT_TRUE(r.orderings->all_pass());
  EXPECT_EQ(r.agreement, true);
}

TEST(Characterize, W6Both) {
  const CharacterizationReport r = Characterize(W6Lattice(), Mode::kBoth);
  EXPECT_FALSE(r.geometric);
  ASSERT_TRUE(r.witness);
  ASSERT_TRUE(r.orderings);
  EXPECT_GT(r.orderings->failures, 0u);
  EXPECT_EQ(r.agreement, true);
}

TEST(Characterize, N5NotAtomic) {
  for (Mode m : {Mode::kExhaustive, Mode::kWitness, Mode::kBoth}) {
    const CharacterizationReport r = Characterize(N5Lattice(), m);
    EXPECT_FALSE(r.atomic);
    EXPECT_FALSE(r.agreement.has_value());
    EXPECT_FALSE(r.orderings);
  }
}

TEST(Mode, ParseRoundTrip) {
  for (Mode m : {Mode::kExhaustive, Mode::kWitness, Mode::kBoth}) {
    EXPECT_EQ(ParseMode(ModeName(m)), m);
  }
  EXPECT_FALSE(ParseMode("sometimes"));
}

// Witness soundness checked with test-side oracles: the ordering fails the
// definition-level EL check, the lex-min chain of [x∧y, x∨y] has a descent,
// and a_y lies below no cover of x.
TEST(ConstructWitness, SoundOnCorpus) {
  std::size_t witnesses = 0;
  for (const Lattice& lat : EnumerateLattices(8)) {
    if (!oracle::IsAtomic(lat) || oracle::IsGeometric(lat)) continue;
    const WitnessCertificate c = ConstructWitness(lat, *DiamondProperty(lat).failure);
    ++witnesses;
    EXPECT_TRUE(WitnessViolations(lat, c).empty());
    EXPECT_FALSE(oracle::IsEl(lat, oracle::GammaFromSequence(c.ordering)));
    EXPECT_TRUE(c.lex_min_chain.descent_position.has_value());
    // The oracle's lex-min sequence on the interval equals the certificate's.
    const oracle::Gamma g = oracle::GammaFromSequence(c.ordering);
    std::vector<int> best;
    bool first = true;
    for (const auto& ch : oracle::Chains(lat, c.failure.meet, c.failure.join)) {
      auto s = oracle::Labels(lat, g, ch);
      if (first || s < best) best = s;
      first = false;
    }
    EXPECT_EQ(best, c.lex_min_chain.labels);
    EXPECT_FALSE(oracle::WeaklyRising(best));
    for (Element z = 0; z < lat.size(); ++z) {
      if (oracle::Covered(lat, c.failure.x, z)) EXPECT_FALSE(lat.Leq(c.a_y, z));
    }
    EXPECT_EQ(c.ordering[0], c.a_x);
    EXPECT_EQ(c.ordering[1], c.a_y);
  }
  EXPECT_GT(witnesses, 0u);
}

}  // namespace
}  // namespace geolattice
