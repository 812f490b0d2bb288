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

// Central hyperplane arrangements in Q^d with integer normals, their
// intersection lattices and region counts. All linear algebra is exact.

#ifndef GEOLATTICE_ARRANGEMENT_HPP_
#define GEOLATTICE_ARRANGEMENT_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "geolattice/lattice.hpp"

namespace geolattice {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;
using IntVector = std::vector<std::int64_t>;

// Reduced row echelon form with zero rows dropped. Two matrices have the
// same row space iff their RREFs are equal.
RationalMatrix ReducedRowEchelon(RationalMatrix rows);
// Basis of {v : row · v = 0 for every row}, in reduced row echelon form.
RationalMatrix NullSpace(const RationalMatrix& rows, std::size_t dim);

class CentralArrangement {
 public:
  // Fails with kDimensionMismatch when a normal has the wrong length,
  // kInvalidArrangement for a zero normal or d = 0, and
  // kDuplicateHyperplane when two normals are parallel.
  CentralArrangement(std::size_t dim, std::vector<IntVector> normals);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return normals_.size(); }
  const std::vector<IntVector>& normals() const { return normals_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> normals_;
};

struct IntersectionLattice {
  // Bottom is the ambient space; larger elements are smaller subspaces.
  Lattice lattice;
  // Canonical basis (RREF) of each element's subspace.
  std::vector<RationalMatrix> subspace;
  // Indices of the hyperplanes containing each element's subspace.
  std::vector<std::vector<std::size_t>> hyperplanes;
};

// Enumerates every intersection of hyperplanes, ordered by reverse
// inclusion. Elements are named by the hyperplanes containing them, e.g.
// "{}" for the ambient space and "{0,2}". Fails with kInternal if the result
// is not a geometric lattice.
IntersectionLattice BuildIntersectionLattice(const CentralArrangement& arr);

// Σ |μ(0̂, x)| over the intersection lattice.
std::uint64_t RegionCount(const CentralArrangement& arr);

inline constexpr std::size_t kMaxOracleHyperplanes = 20;

// Number of sign vectors in {+,-}^n realized by some point of Q^d, each
// decided by exact Fourier-Motzkin elimination on the strict homogeneous
// system. Fails with kBudgetExceeded past kMaxOracleHyperplanes.
std::uint64_t RegionOracle(const CentralArrangement& arr);

}  // namespace geolattice

#endif  // GEOLATTICE_ARRANGEMENT_HPP_
