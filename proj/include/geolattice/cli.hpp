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

#ifndef GEOLATTICE_CLI_HPP_
#define GEOLATTICE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace geolattice {

inline constexpr int kExitOk = 0;
// A result contradicts the characterization, or an internal invariant broke.
inline constexpr int kExitContradiction = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (args[0] is the program name). JSON reports go to
// `out`; diagnostics and --verbose summaries go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace geolattice

#endif  // GEOLATTICE_CLI_HPP_
