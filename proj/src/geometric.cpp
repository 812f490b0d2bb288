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

#include "geolattice/geometric.hpp"

#include "geolattice/error.hpp"

namespace geolattice {

DiamondResult DiamondProperty(const Lattice& lattice) {
  const std::size_t m = lattice.size();
  for (Element x = 0; x < m; ++x) {
    for (Element y = x + 1; y < m; ++y) {
      const Element meet = lattice.Meet(x, y);
      if (!lattice.Covers(meet, x) || !lattice.Covers(meet, y)) continue;
      const Element join = lattice.Join(x, y);
      DiamondFailure f{x, y, meet, join, lattice.Covers(x, join),
                       lattice.Covers(y, join)};
      if (!f.x_covered || !f.y_covered) return {false, f};
    }
  }
  return {};
}

bool IsValidDiamondFailure(const Lattice& lattice, const DiamondFailure& f) {
  const std::size_t m = lattice.size();
  if (f.x >= m || f.y >= m || f.x == f.y) return false;
  if (f.meet != lattice.Meet(f.x, f.y) || f.join != lattice.Join(f.x, f.y)) {
    return false;
  }
  if (!lattice.Covers(f.meet, f.x) || !lattice.Covers(f.meet, f.y)) {
    return false;
  }
  if (f.x_covered != lattice.Covers(f.x, f.join) ||
      f.y_covered != lattice.Covers(f.y, f.join)) {
    return false;
  }
  return !(f.x_covered && f.y_covered);
}

SemimodularResult SemimodularRank(const Lattice& lattice) {
  const GradedResult graded = IsGraded(lattice);
  if (!graded.graded) return {false, false, std::nullopt};
  const auto& rho = graded.rank;
  for (Element x = 0; x < lattice.size(); ++x) {
    for (Element y = x + 1; y < lattice.size(); ++y) {
      if (rho[lattice.Meet(x, y)] + rho[lattice.Join(x, y)] >
          rho[x] + rho[y]) {
        return {false, true, std::pair{x, y}};
      }
    }
  }
  return {};
}

std::string_view ReasonName(GeometricReason reason) {
  switch (reason) {
    case GeometricReason::kOk: return "OK";
    case GeometricReason::kNotAtomic: return "NotAtomic";
    case GeometricReason::kDiamondFailure: return "DiamondFailure";
  }
  return "Unknown";
}

GeometricReport IsGeometric(const Lattice& lattice) {
  GeometricReport r;
  const AtomicityResult atomic = IsAtomic(lattice);
  r.atomic = atomic.atomic;
  r.non_atomic_element = atomic.failing_element;

  const DiamondResult diamond = DiamondProperty(lattice);
  r.diamond = diamond.holds;
  r.diamond_failure = diamond.failure;

  const GradedResult graded = IsGraded(lattice);
  r.graded = graded.graded;
  r.graded_failure = graded.failing_interval;
  r.rank = graded.rank;

  const SemimodularResult semi = SemimodularRank(lattice);
  r.semimodular = semi.holds;
  r.semimodular_violation = semi.violating_pair;

  if (r.diamond != (r.graded && r.semimodular)) {
    throw Error(ErrorKind::kInternal,
                "diamond property and graded+rank-inequality disagree");
  }
  if (!r.atomic) {
    r.reason = GeometricReason::kNotAtomic;
  } else if (!r.diamond) {
    r.reason = GeometricReason::kDiamondFailure;
  }
  r.geometric = r.atomic && r.diamond;
  return r;
}

}  // namespace geolattice
