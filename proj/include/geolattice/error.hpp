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

#ifndef GEOLATTICE_ERROR_HPP_
#define GEOLATTICE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace geolattice {

enum class ErrorKind {
  kCycleDetected,
  kNotTransitivelyReduced,
  kUnknownElement,
  kDuplicateElement,
  kEmptyPoset,
  kNotALattice,
  kTooManyAtoms,
  kInvalidOrdering,
  kEmptyLabelSet,
  kNotAtomic,
  kNotPure,
  kNotELLabeled,
  kBudgetExceeded,
  kUnknownFamily,
  kDuplicateHyperplane,
  kDimensionMismatch,
  kInvalidArrangement,
  kParseError,
  kValidationError,
  // Raised when a result contradicts a proven statement; always a bug.
  kInternal,
};

std::string_view ErrorKindName(ErrorKind kind);

// All recoverable failures in the library surface as this exception. The
// kind lets callers (notably the CLI) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace geolattice

#endif  // GEOLATTICE_ERROR_HPP_
