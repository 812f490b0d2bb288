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

#ifndef GEOLATTICE_MOBIUS_HPP_
#define GEOLATTICE_MOBIUS_HPP_

#include <cstdint>
#include <vector>

#include "geolattice/labeling.hpp"
#include "geolattice/lattice.hpp"

namespace geolattice {

// μ(x, y) for every pair x ≤ y of one lattice.
class MobiusTable {
 public:
  MobiusTable(const Lattice& lattice, std::vector<std::int64_t> values);

  const Lattice& lattice() const { return *lattice_; }
  // Fails with kValidationError unless x ≤ y.
  std::int64_t operator()(Element x, Element y) const;

 private:
  const Lattice* lattice_;
  std::vector<std::int64_t> values_;  // row-major, zero where x ≰ y
};

// μ(x,x) = 1 and μ(x,y) = -Σ_{x≤z<y} μ(x,z).
MobiusTable Mobius(const Lattice& lattice);

// μ(x, y) as the signed count of strictly falling maximal chains of [x, y]:
// Σ (-1)^length over chains whose labels strictly decrease. Only valid for
// EL-labelings, so fails with kNotELLabeled unless the ordering's minimal
// labeling passes verify_el.
MobiusTable MobiusViaFallingChains(const AtomOrdering& ordering,
                                   std::size_t chain_budget = kDefaultChainBudget);

}  // namespace geolattice

#endif  // GEOLATTICE_MOBIUS_HPP_
