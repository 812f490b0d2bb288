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

#include "geolattice/mobius.hpp"

#include "geolattice/el_verifier.hpp"
#include "geolattice/error.hpp"

namespace geolattice {

MobiusTable::MobiusTable(const Lattice& lattice,
                         std::vector<std::int64_t> values)
    : lattice_(&lattice), values_(std::move(values)) {
  if (values_.size() != lattice.size() * lattice.size()) {
    throw Error(ErrorKind::kValidationError, "Mobius table has wrong size");
  }
}

std::int64_t MobiusTable::operator()(Element x, Element y) const {
  if (!lattice_->Leq(x, y)) {
    throw Error(ErrorKind::kValidationError,
                "mu(" + lattice_->name(x) + "," + lattice_->name(y) +
                    ") needs x <= y");
  }
  return values_[x * lattice_->size() + y];
}

MobiusTable Mobius(const Lattice& lattice) {
  const std::size_t m = lattice.size();
  const auto topo = lattice.poset().TopologicalOrder();
  std::vector<std::int64_t> mu(m * m, 0);
  for (Element x = 0; x < m; ++x) {
    for (Element y : topo) {
      if (!lattice.Leq(x, y)) continue;
      if (x == y) {
        mu[x * m + y] = 1;
        continue;
      }
      std::int64_t sum = 0;
      for (Element z = 0; z < m; ++z) {
        if (z != y && lattice.Leq(x, z) && lattice.Leq(z, y)) {
          sum += mu[x * m + z];
        }
      }
      mu[x * m + y] = -sum;
    }
  }
  return MobiusTable(lattice, std::move(mu));
}

MobiusTable MobiusViaFallingChains(const AtomOrdering& ordering,
                                   std::size_t chain_budget) {
  const Lattice& lattice = ordering.lattice();
  const EdgeLabeling labeling = MinimalLabeling(ordering);
  const ElVerifier verifier(lattice, chain_budget);
  if (!verifier.Passes(labeling)) {
    throw Error(ErrorKind::kNotELLabeled,
                "minimal labeling of this ordering is not an EL-labeling");
  }
  const std::size_t m = lattice.size();
  std::vector<std::int64_t> mu(m * m, 0);
  for (Element x = 0; x < m; ++x) mu[x * m + x] = 1;
  for (const auto& iv : verifier.intervals()) {
    std::int64_t signed_count = 0;
    for (const Chain& c : iv.chains) {
      const LabelSequence s = ChainLabels(labeling, c);
      bool falling = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] <= s[i + 1]) {
          falling = false;
          break;
        }
      }
      if (falling) signed_count += s.size() % 2 == 0 ? 1 : -1;
    }
    mu[iv.lo * m + iv.hi] = signed_count;
  }
  return MobiusTable(lattice, std::move(mu));
}

}  // namespace geolattice
