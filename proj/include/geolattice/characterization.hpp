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

// Both directions of the geometric-lattice characterization.
//
// For a finite atomic lattice L the following agree:
//   * L is geometric;
//   * the minimal labeling of every atom ordering is an EL-labeling.
// The forward direction is checked exhaustively over all n! orderings. The
// reverse direction is realized constructively: from a failure (x, y) of the
// diamond property we pick atoms a_x ∈ A(x) \ A(y) and a_y with
// (x∧y) ∨ a_y = y, put them first and second, and the lexicographically
// smallest chain of [x∧y, x∨y] then starts with label 1 and has a descent.

#ifndef GEOLATTICE_CHARACTERIZATION_HPP_
#define GEOLATTICE_CHARACTERIZATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geolattice/el_verifier.hpp"
#include "geolattice/geometric.hpp"
#include "geolattice/lattice.hpp"

namespace geolattice {

struct RunOptions {
  // Maximum number of atom orderings an exhaustive run may visit.
  std::uint64_t ordering_budget = 40320;
  std::size_t chain_budget = kDefaultChainBudget;
  // 0 selects one worker per hardware thread.
  unsigned threads = 0;
};

struct OrderingVerdict {
  std::vector<Element> ordering;  // atoms in label order
  bool passes = false;
};

struct OrderingsResult {
  // One entry per permutation, in lexicographic order of atom ids.
  std::vector<OrderingVerdict> verdicts;
  std::size_t failures = 0;
  std::optional<std::size_t> first_failing_index;
  std::optional<IntervalVerdict> first_failing_interval;

  bool all_pass() const { return failures == 0; }
};

// Runs verify_el on the minimal labeling of every atom ordering. Fails with
// kNotAtomic on non-atomic input and kBudgetExceeded when n! is over budget.
OrderingsResult AllOrderingsEl(const Lattice& lattice,
                               const RunOptions& options = {});

struct WitnessCertificate {
  // Oriented so that x∨y does not cover x.
  DiamondFailure failure;
  Element a_x = 0;
  Element a_y = 0;
  // Atoms in label order: a_x, a_y, then the rest by ascending id.
  std::vector<Element> ordering;
  // Lexicographically smallest maximal chain of [x∧y, x∨y] under the
  // ordering's minimal labeling.
  ChainCertificate lex_min_chain;
  // Verdict of verify_interval on [x∧y, x∨y].
  IntervalStatus interval_status = IntervalStatus::kOk;
};

// Builds the certificate for `failure`. Fails with kNotAtomic for
// non-atomic lattices, kValidationError if `failure` is not a diamond
// failure of `lattice`, and kInternal if the result does not verify.
WitnessCertificate ConstructWitness(const Lattice& lattice,
                                    const DiamondFailure& failure,
                                    std::size_t chain_budget = kDefaultChainBudget);

// Independently re-checks every certificate invariant; returns a description
// of each one that does not hold.
std::vector<std::string> WitnessViolations(
    const Lattice& lattice, const WitnessCertificate& cert,
    std::size_t chain_budget = kDefaultChainBudget);

enum class Mode { kExhaustive, kWitness, kBoth };

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view text);

struct CharacterizationReport {
  bool atomic = true;
  std::optional<Element> non_atomic_element;
  bool geometric = true;
  Mode mode = Mode::kBoth;
  std::optional<DiamondFailure> diamond_failure;
  std::optional<OrderingsResult> orderings;
  std::optional<WitnessCertificate> witness;
  // Whether the observed verdicts match the characterization. Empty when
  // the lattice is not atomic and the statement does not apply.
  std::optional<bool> agreement;
};

CharacterizationReport Characterize(const Lattice& lattice, Mode mode,
                                    const RunOptions& options = {});

}  // namespace geolattice

#endif  // GEOLATTICE_CHARACTERIZATION_HPP_
