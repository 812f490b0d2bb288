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

// The closure operator an atomic lattice induces on its atoms, the
// independence complex derived from it, and the check that every vertex
// order induces a shelling of that complex.
//
// Subsets of the ground set are AtomSet bit masks; bit i is the i-th atom.

#ifndef GEOLATTICE_MATROID_HPP_
#define GEOLATTICE_MATROID_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geolattice/lattice.hpp"

namespace geolattice {

inline constexpr std::size_t kMaxGroundSet = 20;

class MatroidClosure {
 public:
  // cl(W) = A(∨W). Fails with kNotAtomic on non-atomic lattices and
  // kBudgetExceeded beyond kMaxGroundSet atoms.
  static MatroidClosure FromLattice(const Lattice& lattice);
  // Arbitrary closure table indexed by subset mask (2^n entries).
  static MatroidClosure FromTable(std::size_t ground_size,
                                  std::vector<AtomSet> table);

  std::size_t ground_size() const { return ground_size_; }
  AtomSet operator()(AtomSet w) const { return table_[w]; }

 private:
  std::size_t ground_size_ = 0;
  std::vector<AtomSet> table_;
};

struct ClosureAxiomViolation {
  std::string axiom;  // "extensive", "monotone" or "idempotent"
  AtomSet w = 0;
  AtomSet v = 0;      // the larger set, for "monotone"
};

std::optional<ClosureAxiomViolation> CheckClosureAxioms(
    const MatroidClosure& closure);

struct ExchangeViolation {
  AtomSet w = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

// First (W, a, b) with a ∈ cl(W ∪ {b}) \ cl(W) but b ∉ cl(W ∪ {a}), in
// ascending order of W, then a, then b.
std::optional<ExchangeViolation> FindExchangeViolation(
    const MatroidClosure& closure);

class SimplicialComplex {
 public:
  // Keeps only the inclusion-maximal sets of `faces`.
  static SimplicialComplex FromFacets(std::size_t vertex_count,
                                      std::vector<AtomSet> faces);

  std::size_t vertex_count() const { return vertex_count_; }
  // Ascending by mask.
  const std::vector<AtomSet>& facets() const { return facets_; }
  // Largest facet size.
  int rank() const { return rank_; }
  bool pure() const { return pure_; }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<AtomSet> facets_;
  int rank_ = 0;
  bool pure_ = true;
};

// Independent sets are the W with a ∉ cl(W \ {a}) for every a ∈ W.
SimplicialComplex IndependenceComplex(const MatroidClosure& closure);

struct ShellingVerdict {
  std::vector<std::size_t> vertex_order;
  std::vector<AtomSet> facet_order;
  bool shelling = true;
  // Position in facet_order of the first facet whose intersection with the
  // earlier facets is not pure of codimension one.
  std::optional<std::size_t> failing_facet;
  // A maximal face of that intersection that is too small.
  std::optional<AtomSet> witness_face;
};

// Orders facets lexicographically by their vertices listed in
// `vertex_order` sequence and checks the shelling condition. Fails with
// kNotPure on non-pure complexes.
ShellingVerdict VertexOrderShelling(const SimplicialComplex& complex,
                                    std::span<const std::size_t> vertex_order);

struct ShellingSweep {
  std::size_t orders_tested = 0;
  std::size_t failures = 0;
  std::optional<ShellingVerdict> first_failure;
};

// Every vertex order, in lexicographic order of permutations.
ShellingSweep ShellAllVertexOrders(const SimplicialComplex& complex,
                                   unsigned threads = 0);

}  // namespace geolattice

#endif  // GEOLATTICE_MATROID_HPP_
