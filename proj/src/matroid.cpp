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

#include "geolattice/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "geolattice/error.hpp"
#include "geolattice/parallel.hpp"

namespace geolattice {
namespace {

constexpr std::size_t kMaxShellingSweepVertices = 9;

bool Subset(AtomSet a, AtomSet b) { return (a & ~b) == 0; }

}  // namespace

MatroidClosure MatroidClosure::FromLattice(const Lattice& lattice) {
  const AtomicityResult atomic = IsAtomic(lattice);
  if (!atomic.atomic) {
    throw Error(ErrorKind::kNotAtomic,
                "'" + lattice.name(*atomic.failing_element) +
                    "' is not a join of atoms");
  }
  const std::size_t n = lattice.atom_count();
  if (n > kMaxGroundSet) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(n) + " atoms exceed the closure table limit");
  }
  std::vector<AtomSet> table(std::size_t{1} << n);
  for (AtomSet w = 0; w < table.size(); ++w) {
    table[w] = lattice.atom_support(lattice.JoinOfAtoms(w));
  }
  MatroidClosure cl = FromTable(n, std::move(table));
  if (const auto bad = CheckClosureAxioms(cl)) {
    throw Error(ErrorKind::kInternal,
                "lattice closure is not " + bad->axiom);
  }
  return cl;
}

MatroidClosure MatroidClosure::FromTable(std::size_t ground_size,
                                         std::vector<AtomSet> table) {
  if (ground_size > kMaxGroundSet ||
      table.size() != (std::size_t{1} << ground_size)) {
    throw Error(ErrorKind::kValidationError,
                "closure table must have 2^n entries");
  }
  const AtomSet universe = (AtomSet{1} << ground_size) - 1;
  if (std::any_of(table.begin(), table.end(),
                  [&](AtomSet s) { return !Subset(s, universe); })) {
    throw Error(ErrorKind::kValidationError,
                "closure value outside the ground set");
  }
  MatroidClosure cl;
  cl.ground_size_ = ground_size;
  cl.table_ = std::move(table);
  return cl;
}

std::optional<ClosureAxiomViolation> CheckClosureAxioms(
    const MatroidClosure& cl) {
  const AtomSet count = AtomSet{1} << cl.ground_size();
  for (AtomSet w = 0; w < count; ++w) {
    if (!Subset(w, cl(w))) return ClosureAxiomViolation{"extensive", w, 0};
  }
  // Monotonicity along single-element steps implies it for all W ⊆ V.
  for (AtomSet w = 0; w < count; ++w) {
    for (std::size_t b = 0; b < cl.ground_size(); ++b) {
      const AtomSet v = w | AtomSet{1} << b;
      if (v != w && !Subset(cl(w), cl(v))) {
        return ClosureAxiomViolation{"monotone", w, v};
      }
    }
  }
  for (AtomSet w = 0; w < count; ++w) {
    if (cl(cl(w)) != cl(w)) return ClosureAxiomViolation{"idempotent", w, 0};
  }
  return std::nullopt;
}

std::optional<ExchangeViolation> FindExchangeViolation(
    const MatroidClosure& cl) {
  const std::size_t n = cl.ground_size();
  for (AtomSet w = 0; w < (AtomSet{1} << n); ++w) {
    const AtomSet base = cl(w);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        const AtomSet with_b = cl(w | AtomSet{1} << b);
        if (!(with_b >> a & 1) || (base >> a & 1)) continue;
        if (!(cl(w | AtomSet{1} << a) >> b & 1)) {
          return ExchangeViolation{w, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

SimplicialComplex SimplicialComplex::FromFacets(std::size_t vertex_count,
                                                std::vector<AtomSet> faces) {
  if (faces.empty()) faces.push_back(0);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  for (AtomSet f : faces) {
    const bool maximal = std::none_of(faces.begin(), faces.end(), [&](AtomSet g) {
      return g != f && Subset(f, g);
    });
    if (maximal) c.facets_.push_back(f);
  }
  for (AtomSet f : c.facets_) {
    c.rank_ = std::max(c.rank_, std::popcount(f));
  }
  c.pure_ = std::all_of(c.facets_.begin(), c.facets_.end(), [&](AtomSet f) {
    return std::popcount(f) == c.rank_;
  });
  return c;
}

SimplicialComplex IndependenceComplex(const MatroidClosure& cl) {
  const std::size_t n = cl.ground_size();
  std::vector<AtomSet> independent;
  for (AtomSet w = 0; w < (AtomSet{1} << n); ++w) {
    bool ok = true;
    for (AtomSet rest = w; rest != 0 && ok; rest &= rest - 1) {
      const AtomSet a = rest & -rest;
      if (cl(w & ~a) & a) ok = false;
    }
    if (ok) independent.push_back(w);
  }
  return SimplicialComplex::FromFacets(n, std::move(independent));
}

ShellingVerdict VertexOrderShelling(const SimplicialComplex& complex,
                                    std::span<const std::size_t> vertex_order) {
  if (!complex.pure()) {
    throw Error(ErrorKind::kNotPure, "complex is not pure");
  }
  const std::size_t n = complex.vertex_count();
  std::vector<std::size_t> position(n, n);
  if (vertex_order.size() != n) {
    throw Error(ErrorKind::kValidationError, "vertex order has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vertex_order[i] >= n || position[vertex_order[i]] != n) {
      throw Error(ErrorKind::kValidationError,
                  "vertex order is not a permutation");
    }
    position[vertex_order[i]] = i;
  }

  ShellingVerdict v;
  v.vertex_order.assign(vertex_order.begin(), vertex_order.end());
  auto key = [&](AtomSet f) {
    std::vector<std::size_t> k;
    for (; f != 0; f &= f - 1) k.push_back(position[std::countr_zero(f)]);
    std::sort(k.begin(), k.end());
    return k;
  };
  v.facet_order = complex.facets();
  std::sort(v.facet_order.begin(), v.facet_order.end(),
            [&](AtomSet a, AtomSet b) { return key(a) < key(b); });

  for (std::size_t k = 1; k < v.facet_order.size(); ++k) {
    const AtomSet fk = v.facet_order[k];
    const int want = std::popcount(fk) - 1;
    std::vector<AtomSet> meets;
    for (std::size_t i = 0; i < k; ++i) meets.push_back(fk & v.facet_order[i]);
    for (AtomSet m : meets) {
      const bool maximal = std::none_of(meets.begin(), meets.end(), [&](AtomSet o) {
        return o != m && Subset(m, o);
      });
      if (maximal && std::popcount(m) != want) {
        v.shelling = false;
        v.failing_facet = k;
        v.witness_face = m;
        return v;
      }
    }
  }
  return v;
}

ShellingSweep ShellAllVertexOrders(const SimplicialComplex& complex,
                                   unsigned threads) {
  const std::size_t n = complex.vertex_count();
  if (n > kMaxShellingSweepVertices) {
    throw Error(ErrorKind::kBudgetExceeded,
                "shelling sweep is limited to " +
                    std::to_string(kMaxShellingSweepVertices) + " vertices");
  }
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    orders.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<ShellingVerdict> verdicts(orders.size());
  ParallelFor(orders.size(), threads, [&](std::size_t i) {
    verdicts[i] = VertexOrderShelling(complex, orders[i]);
  });
  ShellingSweep sweep;
  sweep.orders_tested = orders.size();
  for (auto& v : verdicts) {
    if (v.shelling) continue;
    ++sweep.failures;
    if (!sweep.first_failure) sweep.first_failure = std::move(v);
  }
  return sweep;
}

}  // namespace geolattice
