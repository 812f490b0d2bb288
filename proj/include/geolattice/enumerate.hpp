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

// Isomorph-free enumeration of small lattices and the corpus-wide check of
// the characterization.
//
// A lattice with m ≥ 2 elements is its bottom and top wrapped around an
// arbitrary poset on m - 2 elements, so lattices are enumerated by growing
// unlabeled posets one maximal element at a time (every order ideal of the
// previous poset is a candidate down-set), rejecting isomorphs by canonical
// form, bounding each survivor and keeping the ones that are lattices.

#ifndef GEOLATTICE_ENUMERATE_HPP_
#define GEOLATTICE_ENUMERATE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geolattice/characterization.hpp"
#include "geolattice/lattice.hpp"

namespace geolattice {

inline constexpr std::size_t kMaxEnumerationElements = 9;

// Canonical code of a poset: equal iff the posets are isomorphic.
std::string CanonicalForm(const Poset& poset);
bool Isomorphic(const Poset& a, const Poset& b);

// All pairwise non-isomorphic lattices with 1..max_elements elements,
// ordered by size. Interior elements are named a, b, c, ...; the bottom is
// "0" and the top "1".
std::vector<Lattice> EnumerateLattices(std::size_t max_elements);

struct CorpusEntry {
  std::size_t index = 0;
  std::size_t elements = 0;
  std::size_t atoms = 0;
  bool atomic = false;
  bool geometric = false;
  std::size_t orderings_tested = 0;
  std::size_t failing_orderings = 0;
  bool witness_verified = false;
  std::optional<bool> agreement;
};

struct CorpusReport {
  std::size_t max_elements = 0;
  std::size_t total = 0;
  std::map<std::size_t, std::size_t> by_size;
  std::size_t atomic = 0;
  std::size_t geometric = 0;
  std::size_t atomic_non_geometric = 0;
  std::size_t disagreements = 0;
  std::vector<CorpusEntry> entries;
};

// Runs Characterize(mode = both) on every atomic lattice of the corpus.
CorpusReport EnumerateAndVerify(std::size_t max_elements,
                                const RunOptions& options = {});

}  // namespace geolattice

#endif  // GEOLATTICE_ENUMERATE_HPP_
