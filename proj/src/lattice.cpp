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

#include "geolattice/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>

#include "geolattice/error.hpp"

namespace geolattice {
namespace {

std::string FormatSet(const Poset& poset, const std::vector<Element>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out << ',';
    out << poset.name(xs[i]);
  }
  out << '}';
  return out.str();
}

std::string FormatPair(const Poset& poset, Element u, Element v) {
  return "(" + poset.name(u) + "," + poset.name(v) + ")";
}

}  // namespace

Poset Poset::Build(std::vector<std::string> names,
                   std::span<const CoverPair> covers) {
  const std::size_t m = names.size();
  if (m == 0) throw Error(ErrorKind::kEmptyPoset, "poset has no elements");
  {
    std::unordered_map<std::string_view, Element> seen;
    for (Element i = 0; i < m; ++i) {
      if (!seen.emplace(names[i], i).second) {
        throw Error(ErrorKind::kDuplicateElement,
                    "element name '" + names[i] + "' appears twice");
      }
    }
  }

  Poset p;
  p.names_ = std::move(names);
  p.up_.assign(m, {});
  p.down_.assign(m, {});
  std::set<CoverPair> unique;
  for (const auto& [u, v] : covers) {
    if (u >= m || v >= m) {
      throw Error(ErrorKind::kUnknownElement,
                  "cover pair references element id " +
                      std::to_string(std::max(u, v)) + " of " +
                      std::to_string(m));
    }
    if (u == v) {
      throw Error(ErrorKind::kCycleDetected,
                  "self-cover on '" + p.names_[u] + "'");
    }
    if (!unique.emplace(u, v).second) {
      throw Error(ErrorKind::kNotTransitivelyReduced,
                  "duplicate cover pair " + FormatPair(p, u, v));
    }
  }
  p.covers_.assign(unique.begin(), unique.end());
  for (const auto& [u, v] : p.covers_) {
    p.up_[u].push_back(v);
    p.down_[v].push_back(u);
  }
  for (auto& d : p.down_) std::sort(d.begin(), d.end());

  // Kahn's algorithm, smallest ready id first.
  std::vector<std::size_t> indegree(m);
  for (Element v = 0; v < m; ++v) indegree[v] = p.down_[v].size();
  std::set<Element> ready;
  for (Element v = 0; v < m; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  while (!ready.empty()) {
    const Element u = *ready.begin();
    ready.erase(ready.begin());
    p.topo_.push_back(u);
    for (Element v : p.up_[u]) {
      if (--indegree[v] == 0) ready.insert(v);
    }
  }
  if (p.topo_.size() != m) {
    Element on_cycle = 0;
    while (indegree[on_cycle] == 0) ++on_cycle;
    throw Error(ErrorKind::kCycleDetected,
                "cover relation has a cycle through '" + p.names_[on_cycle] +
                    "'");
  }

  p.leq_.assign(m * m, 0);
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    const Element u = *it;
    char* row = &p.leq_[u * m];
    row[u] = 1;
    for (Element v : p.up_[u]) {
      const char* vrow = &p.leq_[v * m];
      for (std::size_t w = 0; w < m; ++w) row[w] |= vrow[w];
    }
  }

  for (const auto& [u, v] : p.covers_) {
    for (Element w : p.up_[u]) {
      if (w != v && p.Leq(w, v)) {
        throw Error(ErrorKind::kNotTransitivelyReduced,
                    "cover pair " + FormatPair(p, u, v) + " is implied by " +
                        FormatPair(p, u, w) + " and " + p.names_[w] +
                        " <= " + p.names_[v]);
      }
    }
  }

  p.cover_index_.assign(m * m, -1);
  for (std::size_t i = 0; i < p.covers_.size(); ++i) {
    const auto& [u, v] = p.covers_[i];
    p.cover_index_[u * m + v] = static_cast<int>(i);
  }
  return p;
}

Poset Poset::Build(std::size_t count, std::span<const CoverPair> covers) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::to_string(i));
  return Build(std::move(names), covers);
}

std::optional<Element> Poset::Find(std::string_view name) const {
  for (Element i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Lattice Lattice::FromPoset(Poset poset) {
  Lattice lat(std::move(poset));
  const Poset& p = lat.poset_;
  const std::size_t m = p.size();

  std::vector<Element> minimal, maximal;
  for (Element x = 0; x < m; ++x) {
    if (p.LowerCovers(x).empty()) minimal.push_back(x);
    if (p.UpperCovers(x).empty()) maximal.push_back(x);
  }
  if (minimal.size() > 1) {
    throw Error(ErrorKind::kNotALattice,
                "pair " + FormatPair(p, minimal[0], minimal[1]) +
                    " has no lower bound; maximal lower bounds {}");
  }
  if (maximal.size() > 1) {
    throw Error(ErrorKind::kNotALattice,
                "pair " + FormatPair(p, maximal[0], maximal[1]) +
                    " has no upper bound; minimal upper bounds {}");
  }
  lat.bottom_ = minimal.front();
  lat.top_ = maximal.front();

  const auto topo = p.TopologicalOrder();
  lat.join_.assign(m * m, 0);
  lat.meet_.assign(m * m, 0);
  for (Element u = 0; u < m; ++u) {
    for (Element v = u; v < m; ++v) {
      // Least upper bound: the topologically first upper bound, provided it
      // lies below every other upper bound.
      std::vector<Element> ubs;
      for (Element w : topo) {
        if (p.Leq(u, w) && p.Leq(v, w)) ubs.push_back(w);
      }
      const bool least = std::all_of(ubs.begin(), ubs.end(), [&](Element w) {
        return p.Leq(ubs.front(), w);
      });
      if (!least) {
        std::vector<Element> mins;
        for (Element w : ubs) {
          if (std::none_of(ubs.begin(), ubs.end(), [&](Element z) {
                return p.Less(z, w);
              })) {
            mins.push_back(w);
          }
        }
        std::sort(mins.begin(), mins.end());
        throw Error(ErrorKind::kNotALattice,
                    "pair " + FormatPair(p, u, v) +
                        " has minimal upper bounds " + FormatSet(p, mins));
      }
      lat.join_[u * m + v] = lat.join_[v * m + u] = ubs.front();

      std::vector<Element> lbs;
      for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        if (p.Leq(*it, u) && p.Leq(*it, v)) lbs.push_back(*it);
      }
      const bool greatest =
          std::all_of(lbs.begin(), lbs.end(),
                      [&](Element w) { return p.Leq(w, lbs.front()); });
      if (!greatest) {
        std::vector<Element> maxs;
        for (Element w : lbs) {
          if (std::none_of(lbs.begin(), lbs.end(), [&](Element z) {
                return p.Less(w, z);
              })) {
            maxs.push_back(w);
          }
        }
        std::sort(maxs.begin(), maxs.end());
        throw Error(ErrorKind::kNotALattice,
                    "pair " + FormatPair(p, u, v) +
                        " has maximal lower bounds " + FormatSet(p, maxs));
      }
      lat.meet_[u * m + v] = lat.meet_[v * m + u] = lbs.front();
    }
  }

  const auto ups = p.UpperCovers(lat.bottom_);
  lat.atoms_.assign(ups.begin(), ups.end());
  if (lat.atoms_.size() > kMaxAtoms) {
    throw Error(ErrorKind::kTooManyAtoms,
                std::to_string(lat.atoms_.size()) + " atoms exceed the limit " +
                    std::to_string(kMaxAtoms));
  }
  lat.atom_index_.assign(m, -1);
  for (std::size_t i = 0; i < lat.atoms_.size(); ++i) {
    lat.atom_index_[lat.atoms_[i]] = static_cast<int>(i);
  }
  lat.support_.assign(m, 0);
  for (Element x = 0; x < m; ++x) {
    for (std::size_t i = 0; i < lat.atoms_.size(); ++i) {
      if (p.Leq(lat.atoms_[i], x)) lat.support_[x] |= AtomSet{1} << i;
    }
  }
  return lat;
}

Element Lattice::JoinOfAtoms(AtomSet atoms) const {
  Element acc = bottom_;
  while (atoms != 0) {
    const int i = std::countr_zero(atoms);
    atoms &= atoms - 1;
    acc = Join(acc, atoms_[i]);
  }
  return acc;
}

std::optional<std::size_t> Lattice::AtomIndex(Element x) const {
  if (atom_index_[x] < 0) return std::nullopt;
  return static_cast<std::size_t>(atom_index_[x]);
}

Interval MakeInterval(const Lattice& lattice, Element lo, Element hi) {
  if (lo >= lattice.size() || hi >= lattice.size() || !lattice.Leq(lo, hi)) {
    throw Error(ErrorKind::kValidationError,
                "interval endpoints must satisfy lo <= hi");
  }
  Interval iv{lo, hi, {}};
  for (Element z = 0; z < lattice.size(); ++z) {
    if (lattice.Leq(lo, z) && lattice.Leq(z, hi)) iv.members.push_back(z);
  }
  return iv;
}

std::vector<Chain> MaximalChains(const Lattice& lattice, Element lo,
                                 Element hi, std::size_t budget) {
  if (!lattice.Leq(lo, hi)) {
    throw Error(ErrorKind::kValidationError,
                "interval endpoints must satisfy lo <= hi");
  }
  const Poset& p = lattice.poset();
  std::vector<Chain> chains;
  Chain current{lo};
  // Explicit stack of (element, next child position).
  std::vector<std::pair<Element, std::size_t>> stack{{lo, 0}};
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    if (x == hi) {
      if (chains.size() == budget) {
        throw Error(ErrorKind::kBudgetExceeded,
                    "interval [" + p.name(lo) + "," + p.name(hi) +
                        "] has more than " + std::to_string(budget) +
                        " maximal chains");
      }
      chains.push_back(current);
      stack.pop_back();
      current.pop_back();
      continue;
    }
    const auto ups = p.UpperCovers(x);
    while (next < ups.size() && !p.Leq(ups[next], hi)) ++next;
    if (next == ups.size()) {
      stack.pop_back();
      current.pop_back();
      continue;
    }
    const Element child = ups[next++];
    current.push_back(child);
    stack.emplace_back(child, 0);
  }
  return chains;
}

AtomicityResult IsAtomic(const Lattice& lattice) {
  for (Element x = 0; x < lattice.size(); ++x) {
    if (lattice.JoinOfAtoms(lattice.atom_support(x)) != x) {
      return {false, x};
    }
  }
  return {};
}

GradedResult IsGraded(const Lattice& lattice) {
  const Poset& p = lattice.poset();
  const std::size_t m = p.size();
  std::vector<int> shortest(m, 0), longest(m, 0);
  for (Element x : p.TopologicalOrder()) {
    const auto downs = p.LowerCovers(x);
    if (downs.empty()) continue;
    int lo = shortest[downs[0]] + 1, hi = longest[downs[0]] + 1;
    for (Element d : downs) {
      lo = std::min(lo, shortest[d] + 1);
      hi = std::max(hi, longest[d] + 1);
    }
    shortest[x] = lo;
    longest[x] = hi;
  }
  GradedResult result;
  for (Element x = 0; x < m; ++x) {
    if (shortest[x] != longest[x]) {
      result.graded = false;
      result.failing_interval = {lattice.bottom(), x};
      return result;
    }
  }
  result.rank = std::move(shortest);
  return result;
}

std::vector<std::string> ChainNames(const Lattice& lattice,
                                    const Chain& chain) {
  std::vector<std::string> out;
  out.reserve(chain.size());
  for (Element x : chain) out.push_back(lattice.name(x));
  return out;
}

std::vector<std::string> AtomNames(const Lattice& lattice, AtomSet atoms) {
  std::vector<std::string> out;
  const auto all = lattice.atoms();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (atoms >> i & 1) out.push_back(lattice.name(all[i]));
  }
  return out;
}

}  // namespace geolattice
