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

#include "geolattice/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "geolattice/error.hpp"
#include "geolattice/geometric.hpp"
#include "geolattice/mobius.hpp"

namespace geolattice {
namespace {

using boost::multiprecision::cpp_int;
using IntRow = std::vector<cpp_int>;

std::vector<Rational> ToRational(const IntVector& v) {
  return {v.begin(), v.end()};
}

bool Orthogonal(const IntVector& normal, const std::vector<Rational>& v) {
  Rational dot = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) dot += normal[i] * v[i];
  return dot == 0;
}

void Normalize(IntRow& row) {
  cpp_int g = 0;
  for (const cpp_int& c : row) g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    for (cpp_int& c : row) c /= g;
  }
}

// Whether {x : row · x > 0 for every row} is nonempty. Eliminates one
// coordinate at a time; strict inequalities stay strict under positive
// combinations, and a bounded-on-both-sides coordinate exists exactly when
// every lower bound is below every upper bound.
bool StrictSystemFeasible(std::vector<IntRow> rows, std::size_t dim) {
  for (std::size_t j = dim; j-- > 0;) {
    std::vector<IntRow> pos, neg, next;
    for (IntRow& r : rows) {
      if (r[j] > 0) {
        pos.push_back(std::move(r));
      } else if (r[j] < 0) {
        neg.push_back(std::move(r));
      } else {
        next.push_back(std::move(r));
      }
    }
    for (const IntRow& p : pos) {
      for (const IntRow& n : neg) {
        IntRow combo(dim);
        const cpp_int a = -n[j];
        const cpp_int b = p[j];
        for (std::size_t i = 0; i < dim; ++i) combo[i] = a * p[i] + b * n[i];
        Normalize(combo);
        next.push_back(std::move(combo));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (const IntRow& r : next) {
      // 0 > 0 is unsatisfiable.
      if (std::all_of(r.begin(), r.end(), [](const cpp_int& c) { return c == 0; })) {
        return false;
      }
    }
    rows = std::move(next);
  }
  return rows.empty();
}

}  // namespace

RationalMatrix ReducedRowEchelon(RationalMatrix rows) {
  std::size_t pivot_row = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[pivot_row]);
    const Rational inv = 1 / rows[pivot_row][c];
    for (Rational& v : rows[pivot_row]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[i][k] -= f * rows[pivot_row][k];
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

RationalMatrix NullSpace(const RationalMatrix& rows, std::size_t dim) {
  const RationalMatrix r = ReducedRowEchelon(rows);
  std::vector<int> pivot_of_col(dim, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (r[i][c] != 0) {
        pivot_of_col[c] = static_cast<int>(i);
        break;
      }
    }
  }
  RationalMatrix basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<Rational> v(dim, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < dim; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -r[pivot_of_col[c]][f];
    }
    basis.push_back(std::move(v));
  }
  return ReducedRowEchelon(std::move(basis));
}

CentralArrangement::CentralArrangement(std::size_t dim,
                                       std::vector<IntVector> normals)
    : dim_(dim), normals_(std::move(normals)) {
  if (dim_ == 0) {
    throw Error(ErrorKind::kInvalidArrangement, "dimension must be positive");
  }
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    const IntVector& n = normals_[i];
    if (n.size() != dim_) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "hyperplane " + std::to_string(i) + " has " +
                      std::to_string(n.size()) + " coordinates, expected " +
                      std::to_string(dim_));
    }
    if (std::all_of(n.begin(), n.end(), [](std::int64_t c) { return c == 0; })) {
      throw Error(ErrorKind::kInvalidArrangement,
                  "hyperplane " + std::to_string(i) + " has a zero normal");
    }
  }
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    for (std::size_t j = i + 1; j < normals_.size(); ++j) {
      bool parallel = true;
      for (std::size_t a = 0; a < dim_ && parallel; ++a) {
        for (std::size_t b = a + 1; b < dim_; ++b) {
          const __int128 minor =
              static_cast<__int128>(normals_[i][a]) * normals_[j][b] -
              static_cast<__int128>(normals_[i][b]) * normals_[j][a];
          if (minor != 0) {
            parallel = false;
            break;
          }
        }
      }
      if (parallel) {
        throw Error(ErrorKind::kDuplicateHyperplane,
                    "hyperplanes " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide");
      }
    }
  }
}

IntersectionLattice BuildIntersectionLattice(const CentralArrangement& arr) {
  const std::size_t d = arr.dim();
  const auto& normals = arr.normals();

  struct Flat {
    RationalMatrix basis;
    std::vector<std::size_t> hyperplanes;
  };
  std::vector<Flat> flats;
  std::map<RationalMatrix, std::size_t> index;

  auto add = [&](RationalMatrix basis) {
    if (index.count(basis)) return;
    Flat f{basis, {}};
    for (std::size_t h = 0; h < normals.size(); ++h) {
      if (std::all_of(basis.begin(), basis.end(), [&](const auto& v) {
            return Orthogonal(normals[h], v);
          })) {
        f.hyperplanes.push_back(h);
      }
    }
    index.emplace(std::move(basis), flats.size());
    flats.push_back(std::move(f));
  };

  add(NullSpace({}, d));
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t h = 0; h < normals.size(); ++h) {
      const auto& hs = flats[i].hyperplanes;
      if (std::binary_search(hs.begin(), hs.end(), h)) continue;
      RationalMatrix rows;
      for (std::size_t k : hs) rows.push_back(ToRational(normals[k]));
      rows.push_back(ToRational(normals[h]));
      add(NullSpace(rows, d));
    }
  }

  // Ids ascending by codimension, then by hyperplane set.
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.basis.size() != b.basis.size()) return a.basis.size() > b.basis.size();
    return a.hyperplanes < b.hyperplanes;
  });

  const std::size_t m = flats.size();
  auto below = [&](std::size_t u, std::size_t v) {
    const auto& a = flats[u].hyperplanes;
    const auto& b = flats[v].hyperplanes;
    return u != v && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::string> names;
  std::vector<CoverPair> covers;
  for (std::size_t u = 0; u < m; ++u) {
    std::string name = "{";
    for (std::size_t i = 0; i < flats[u].hyperplanes.size(); ++i) {
      if (i > 0) name += ",";
      name += std::to_string(flats[u].hyperplanes[i]);
    }
    names.push_back(name + "}");
    for (std::size_t v = 0; v < m; ++v) {
      if (!below(u, v)) continue;
      bool cover = true;
      for (std::size_t w = 0; w < m && cover; ++w) {
        if (below(u, w) && below(w, v)) cover = false;
      }
      if (cover) {
        covers.emplace_back(static_cast<Element>(u), static_cast<Element>(v));
      }
    }
  }

  IntersectionLattice out{
      Lattice::FromPoset(Poset::Build(std::move(names), covers)), {}, {}};
  for (Flat& f : flats) {
    out.subspace.push_back(std::move(f.basis));
    out.hyperplanes.push_back(std::move(f.hyperplanes));
  }
  if (!IsGeometric(out.lattice).geometric) {
    throw Error(ErrorKind::kInternal,
                "intersection lattice is not geometric");
  }
  return out;
}

std::uint64_t RegionCount(const CentralArrangement& arr) {
  const IntersectionLattice il = BuildIntersectionLattice(arr);
  const Lattice& lat = il.lattice;
  const MobiusTable mu = Mobius(lat);
  std::uint64_t total = 0;
  for (Element x = 0; x < lat.size(); ++x) {
    const std::int64_t v = mu(lat.bottom(), x);
    total += static_cast<std::uint64_t>(v < 0 ? -v : v);
  }
  return total;
}

std::uint64_t RegionOracle(const CentralArrangement& arr) {
  const std::size_t n = arr.size();
  if (n > kMaxOracleHyperplanes) {
    throw Error(ErrorKind::kBudgetExceeded,
                "region oracle is limited to " +
                    std::to_string(kMaxOracleHyperplanes) + " hyperplanes");
  }
  std::uint64_t regions = 0;
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
    std::vector<IntRow> rows;
    for (std::size_t h = 0; h < n; ++h) {
      IntRow r(arr.dim());
      const int s = (signs >> h & 1) ? -1 : 1;
      for (std::size_t i = 0; i < arr.dim(); ++i) {
        r[i] = s * arr.normals()[h][i];
      }
      rows.push_back(std::move(r));
    }
    if (StrictSystemFeasible(std::move(rows), arr.dim())) ++regions;
  }
  return regions;
}

}  // namespace geolattice
