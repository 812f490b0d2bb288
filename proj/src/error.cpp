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

#include "geolattice/error.hpp"

namespace geolattice {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kNotTransitivelyReduced: return "NotTransitivelyReduced";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kDuplicateElement: return "DuplicateElement";
    case ErrorKind::kEmptyPoset: return "EmptyPoset";
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kTooManyAtoms: return "TooManyAtoms";
    case ErrorKind::kInvalidOrdering: return "InvalidOrdering";
    case ErrorKind::kEmptyLabelSet: return "EmptyLabelSet";
    case ErrorKind::kNotAtomic: return "NotAtomic";
    case ErrorKind::kNotPure: return "NotPure";
    case ErrorKind::kNotELLabeled: return "NotELLabeled";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kUnknownFamily: return "UnknownFamily";
    case ErrorKind::kDuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kInvalidArrangement: return "InvalidArrangement";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kValidationError: return "ValidationError";
    case ErrorKind::kInternal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace geolattice
