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

// Exact EL-labeling checks.
//
// A labeling is EL when every interval [x, y] with x < y has exactly one
// rising maximal chain and that chain's label sequence is strictly smaller,
// lexicographically, than the sequence of every other maximal chain. Rising
// means weakly increasing. Sequences of different lengths (non-graded
// intervals) compare in dictionary order, so a proper prefix is smaller.

#ifndef GEOLATTICE_EL_VERIFIER_HPP_
#define GEOLATTICE_EL_VERIFIER_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geolattice/labeling.hpp"
#include "geolattice/lattice.hpp"

namespace geolattice {

enum class IntervalStatus {
  kOk,
  kNoRisingChain,
  kMultipleRisingChains,
  kRisingNotLexMin,
};

std::string_view StatusName(IntervalStatus status);

bool IsRising(std::span<const Label> seq);
// 1-based position i of the first descent λ_i > λ_{i+1}.
std::optional<std::size_t> FirstDescent(std::span<const Label> seq);
std::strong_ordering LexCompare(std::span<const Label> a,
                                std::span<const Label> b);

struct ChainCertificate {
  Chain chain;
  LabelSequence labels;
  bool is_rising = true;
  std::optional<std::size_t> descent_position;
};

ChainCertificate CertifyChain(const EdgeLabeling& labeling, Chain chain);

struct IntervalVerdict {
  Element lo = 0;
  Element hi = 0;
  IntervalStatus status = IntervalStatus::kOk;
  // Every maximal chain, in the order supplied.
  std::vector<ChainCertificate> chains;
  std::vector<ChainCertificate> rising_chains;
  // Minimal label sequence; ties go to the chain whose element ids are
  // lexicographically smallest, so the choice ignores enumeration order.
  ChainCertificate lex_min_chain;
  // kRisingNotLexMin only: a different chain whose sequence is not larger
  // than the rising chain's.
  std::optional<ChainCertificate> undercutting_chain;
};

// Classifies [lo, hi] given its maximal chains (in any order).
IntervalVerdict ClassifyInterval(const EdgeLabeling& labeling, Element lo,
                                 Element hi, std::span<const Chain> chains);

IntervalVerdict VerifyInterval(const EdgeLabeling& labeling, Element lo,
                               Element hi,
                               std::size_t chain_budget = kDefaultChainBudget);

struct ElReport {
  bool is_el = true;
  // Failing interval with the smallest (lo, hi) id pair.
  std::optional<IntervalVerdict> first_failure;
  // Every interval lo < hi in ascending (lo, hi) order; filled only when
  // requested.
  std::vector<IntervalVerdict> verdicts;
};

// Precomputes the maximal chains of every interval of one lattice so that
// many labelings of it can be checked cheaply. Immutable after construction
// and safe to share between threads.
class ElVerifier {
 public:
  explicit ElVerifier(const Lattice& lattice,
                      std::size_t chain_budget = kDefaultChainBudget);

  const Lattice& lattice() const { return *lattice_; }

  ElReport Verify(const EdgeLabeling& labeling, bool collect_all = false) const;
  // Same verdict as Verify(labeling).is_el without building certificates.
  bool Passes(const EdgeLabeling& labeling) const;

  struct IntervalChains {
    Element lo;
    Element hi;
    std::vector<Chain> chains;
  };
  std::span<const IntervalChains> intervals() const { return intervals_; }

 private:
  const Lattice* lattice_;
  std::vector<IntervalChains> intervals_;
};

ElReport VerifyEl(const EdgeLabeling& labeling, bool collect_all = false,
                  std::size_t chain_budget = kDefaultChainBudget);

}  // namespace geolattice

#endif  // GEOLATTICE_EL_VERIFIER_HPP_
