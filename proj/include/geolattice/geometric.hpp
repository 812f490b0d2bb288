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

// Gradedness, semimodularity and geometricity.
//
// A finite lattice is geometric when it is atomic and semimodular. The
// semimodular half is decided two ways: by the cover-level diamond property
// (x, y ⋗ x∧y implies x∨y ⋗ x, y) and by gradedness plus the rank
// inequality ρ(x∧y) + ρ(x∨y) ≤ ρ(x) + ρ(y). The two are equivalent for
// finite lattices, and IsGeometric treats any disagreement as a bug.

#ifndef GEOLATTICE_GEOMETRIC_HPP_
#define GEOLATTICE_GEOMETRIC_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "geolattice/lattice.hpp"

namespace geolattice {

using RankFunction = std::vector<int>;

struct DiamondFailure {
  Element x = 0;
  Element y = 0;
  Element meet = 0;
  Element join = 0;
  bool x_covered = false;  // x ⋖ x∨y
  bool y_covered = false;  // y ⋖ x∨y
};

struct DiamondResult {
  bool holds = true;
  // Smallest failing (x, y) with x < y by id.
  std::optional<DiamondFailure> failure;
};

DiamondResult DiamondProperty(const Lattice& lattice);

// True when `f` is a genuine failure of the diamond property in `lattice`.
bool IsValidDiamondFailure(const Lattice& lattice, const DiamondFailure& f);

struct SemimodularResult {
  bool holds = true;
  bool graded = true;
  // Smallest (x, y) by id violating the rank inequality.
  std::optional<std::pair<Element, Element>> violating_pair;
};

SemimodularResult SemimodularRank(const Lattice& lattice);

enum class GeometricReason { kOk, kNotAtomic, kDiamondFailure };

std::string_view ReasonName(GeometricReason reason);

struct GeometricReport {
  bool atomic = true;
  bool graded = true;
  bool semimodular = true;
  bool diamond = true;
  bool geometric = true;
  GeometricReason reason = GeometricReason::kOk;
  std::optional<Element> non_atomic_element;
  std::optional<DiamondFailure> diamond_failure;
  std::optional<std::pair<Element, Element>> semimodular_violation;
  std::optional<std::pair<Element, Element>> graded_failure;
  RankFunction rank;  // empty unless graded
};

GeometricReport IsGeometric(const Lattice& lattice);

}  // namespace geolattice

#endif  // GEOLATTICE_GEOMETRIC_HPP_
