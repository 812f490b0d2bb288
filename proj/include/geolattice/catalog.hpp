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

#ifndef GEOLATTICE_CATALOG_HPP_
#define GEOLATTICE_CATALOG_HPP_

#include <cstddef>
#include <string_view>
#include <variant>

#include "geolattice/arrangement.hpp"
#include "geolattice/lattice.hpp"

namespace geolattice {

enum class Family {
  kBoolean,
  kPartition,
  kChain,
  kW6,
  kN5,
  kCoordinateArrangement,
  kBraidArrangement,
};

// Accepts "boolean", "partition", "chain", "w6", "n5",
// "coordinate-arrangement" and "braid-arrangement"; anything else fails
// with kUnknownFamily.
Family ParseFamily(std::string_view tag);

// Subsets of {1..n} by inclusion, named by their digits ("0" for the empty
// set, "12" for {1,2}). n ≤ 6.
Lattice BooleanLattice(std::size_t n);
// Set partitions of {1..n} by refinement, named in block notation such as
// "1|23". n ≤ 5.
Lattice PartitionLattice(std::size_t n);
// Total order on n ≥ 1 elements: "0", "a", "b", ..., "1".
Lattice ChainLattice(std::size_t n);
// 0 < a, b, c; a, c < d; b, d < 1. Atomic but not geometric.
Lattice W6Lattice();
// The pentagon 0 < a < c < 1, 0 < b < 1. Not atomic.
Lattice N5Lattice();

// x_i = 0 for i = 1..n in Q^n.
CentralArrangement CoordinateArrangement(std::size_t n);
// x_i = x_j for i < j in Q^n.
CentralArrangement BraidArrangement(std::size_t n);

using Generated = std::variant<Lattice, CentralArrangement>;

// Fails with kBudgetExceeded when n is outside the family's range. The w6
// and n5 fixtures ignore n.
Generated Generate(Family family, std::size_t n);

}  // namespace geolattice

#endif  // GEOLATTICE_CATALOG_HPP_
