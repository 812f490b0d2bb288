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

// File formats. One JSON object per file.
//
// Lattice:      {"elements": ["0", "a", ...], "covers": [["0", "a"], ...]}
// Arrangement:  {"dim": 3, "hyperplanes": [[1, -1, 0], ...]}
//
// Unknown keys are rejected. Malformed JSON fails with kParseError (the
// message carries line and column); structurally valid JSON describing an
// invalid object fails with kValidationError quoting the underlying error.

#ifndef GEOLATTICE_IO_HPP_
#define GEOLATTICE_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "geolattice/arrangement.hpp"
#include "geolattice/lattice.hpp"

namespace geolattice {

Poset ParsePosetJson(std::string_view text);
Lattice ParseLatticeJson(std::string_view text);
nlohmann::json LatticeToJson(const Poset& poset);

CentralArrangement ParseArrangementJson(std::string_view text);
nlohmann::json ArrangementToJson(const CentralArrangement& arr);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

Lattice LoadLattice(const std::string& path);
void SaveLattice(const std::string& path, const Lattice& lattice);
CentralArrangement LoadArrangement(const std::string& path);
void SaveArrangement(const std::string& path, const CentralArrangement& arr);

}  // namespace geolattice

#endif  // GEOLATTICE_IO_HPP_
