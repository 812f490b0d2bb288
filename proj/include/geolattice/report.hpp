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

// JSON renderings of verdicts and certificates. Elements always appear by
// name; keys are emitted in sorted order.

#ifndef GEOLATTICE_REPORT_HPP_
#define GEOLATTICE_REPORT_HPP_

#include "json.hpp"

#include "geolattice/characterization.hpp"
#include "geolattice/el_verifier.hpp"
#include "geolattice/enumerate.hpp"
#include "geolattice/geometric.hpp"
#include "geolattice/matroid.hpp"
#include "geolattice/mobius.hpp"

namespace geolattice {

nlohmann::json ToJson(const Lattice& lattice, const ChainCertificate& cert);
nlohmann::json ToJson(const Lattice& lattice, const IntervalVerdict& verdict);
nlohmann::json ToJson(const Lattice& lattice, const ElReport& report);
nlohmann::json ToJson(const Lattice& lattice, const DiamondFailure& failure);
// {atomic, graded, semimodular, diamond, geometric, failure?}
nlohmann::json ToJson(const Lattice& lattice, const GeometricReport& report);
nlohmann::json ToJson(const Lattice& lattice, const WitnessCertificate& cert);
nlohmann::json ToJson(const Lattice& lattice,
                      const CharacterizationReport& report);
nlohmann::json ToJson(const CorpusReport& report);
// Every pair x ≤ y as {"x", "y", "mu"}.
nlohmann::json ToJson(const MobiusTable& table);
nlohmann::json ToJson(const Lattice& lattice, const SimplicialComplex& complex);
nlohmann::json ToJson(const Lattice& lattice, const ShellingVerdict& verdict);

}  // namespace geolattice

#endif  // GEOLATTICE_REPORT_HPP_
