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

// Finite posets and lattices given by their Hasse diagrams.
//
// Elements are dense ids 0..m-1 with a parallel name table. Every table
// (order, join, meet, atom support) is indexed by id, so all order queries
// are O(1) after construction. Both types are immutable once built.

#ifndef GEOLATTICE_LATTICE_HPP_
#define GEOLATTICE_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geolattice {

using Element = std::uint32_t;
using CoverPair = std::pair<Element, Element>;

// A saturated chain x_1 ⋖ x_2 ⋖ ... ⋖ x_j, listed bottom to top.
using Chain = std::vector<Element>;

// Bit i is set iff the i-th atom (atoms sorted by element id) is present.
using AtomSet = std::uint64_t;
inline constexpr std::size_t kMaxAtoms = 64;

inline constexpr std::size_t kDefaultChainBudget = 1'000'000;

class Poset {
 public:
  // Validates and builds the poset whose Hasse diagram is `covers`. A pair
  // (u, v) means u ⋖ v. Rejects cycles, unknown ids, duplicate names and
  // any pair implied by transitivity of the others.
  static Poset Build(std::vector<std::string> names,
                     std::span<const CoverPair> covers);
  // Same, naming elements by their decimal id.
  static Poset Build(std::size_t count, std::span<const CoverPair> covers);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> Find(std::string_view name) const;

  bool Leq(Element u, Element v) const { return leq_[u * size() + v] != 0; }
  bool Less(Element u, Element v) const { return u != v && Leq(u, v); }
  bool Comparable(Element u, Element v) const {
    return Leq(u, v) || Leq(v, u);
  }
  bool Covers(Element u, Element v) const { return CoverIndex(u, v) >= 0; }

  // Index into cover_pairs(), or -1 when u is not covered by v.
  int CoverIndex(Element u, Element v) const {
    return cover_index_[u * size() + v];
  }

  // Cover pairs sorted ascending by (lower, upper).
  const std::vector<CoverPair>& cover_pairs() const { return covers_; }
  // Sorted ascending by id.
  std::span<const Element> UpperCovers(Element x) const { return up_[x]; }
  std::span<const Element> LowerCovers(Element x) const { return down_[x]; }
  // A linear extension: every element precedes everything above it.
  std::span<const Element> TopologicalOrder() const { return topo_; }

 private:
  Poset() = default;

  std::vector<std::string> names_;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<Element> topo_;
  std::vector<char> leq_;
  std::vector<int> cover_index_;
};

class Lattice {
 public:
  // Fails with kNotALattice when some pair lacks a unique least upper bound
  // or greatest lower bound, and with kTooManyAtoms beyond kMaxAtoms atoms.
  static Lattice FromPoset(Poset poset);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& name(Element x) const { return poset_.name(x); }
  bool Leq(Element u, Element v) const { return poset_.Leq(u, v); }
  bool Less(Element u, Element v) const { return poset_.Less(u, v); }
  bool Covers(Element u, Element v) const { return poset_.Covers(u, v); }

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  Element Join(Element u, Element v) const { return join_[u * size() + v]; }
  Element Meet(Element u, Element v) const { return meet_[u * size() + v]; }
  // Join of the atoms in `atoms`; the empty join is the bottom element.
  Element JoinOfAtoms(AtomSet atoms) const;

  // Covers of the bottom element, ascending by id.
  std::span<const Element> atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  // Position of `x` within atoms(), if it is an atom.
  std::optional<std::size_t> AtomIndex(Element x) const;
  // A(x): the atoms below x.
  AtomSet atom_support(Element x) const { return support_[x]; }

 private:
  explicit Lattice(Poset poset) : poset_(std::move(poset)) {}

  Poset poset_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> atoms_;
  std::vector<int> atom_index_;
  std::vector<AtomSet> support_;
};

struct Interval {
  Element lo = 0;
  Element hi = 0;
  std::vector<Element> members;  // ascending by id
};

// The closed interval [lo, hi]; fails with kValidationError unless lo ≤ hi.
Interval MakeInterval(const Lattice& lattice, Element lo, Element hi);

// Every maximal chain of [lo, hi], found depth first with children visited in
// ascending id order. Fails with kBudgetExceeded once more than `budget`
// chains have been produced.
std::vector<Chain> MaximalChains(const Lattice& lattice, Element lo,
                                 Element hi,
                                 std::size_t budget = kDefaultChainBudget);

struct AtomicityResult {
  bool atomic = true;
  // Smallest id that is not the join of the atoms beneath it.
  std::optional<Element> failing_element;
};

AtomicityResult IsAtomic(const Lattice& lattice);

struct GradedResult {
  bool graded = true;
  // ρ per element when graded.
  std::vector<int> rank;
  // When not graded: an interval [bottom, x] containing maximal chains of
  // different lengths (x is the smallest such id).
  std::optional<std::pair<Element, Element>> failing_interval;
};

GradedResult IsGraded(const Lattice& lattice);

// Names of the chain's elements, in order.
std::vector<std::string> ChainNames(const Lattice& lattice, const Chain& chain);
// Names of the atoms in `atoms`, ascending by id.
std::vector<std::string> AtomNames(const Lattice& lattice, AtomSet atoms);

}  // namespace geolattice

#endif  // GEOLATTICE_LATTICE_HPP_
