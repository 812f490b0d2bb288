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

#include "geolattice/catalog.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "geolattice/error.hpp"

namespace geolattice {
namespace {

void RequireRange(std::string_view family, std::size_t n, std::size_t lo,
                  std::size_t hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::string(family) + " needs " + std::to_string(lo) +
                    " <= n <= " + std::to_string(hi) + ", got " +
                    std::to_string(n));
  }
}

using Blocks = std::vector<std::vector<int>>;

std::string BlockName(const Blocks& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += '|';
    for (int e : blocks[i]) out += std::to_string(e);
  }
  return out;
}

Blocks Canonical(Blocks blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

void AllPartitions(int next, int n, Blocks& current, std::vector<Blocks>& out) {
  if (next > n) {
    out.push_back(current);
    return;
  }
  // Indexed: the recursion appends to `current`, invalidating references.
  for (std::size_t i = 0; i < current.size(); ++i) {
    current[i].push_back(next);
    AllPartitions(next + 1, n, current, out);
    current[i].pop_back();
  }
  current.push_back({next});
  AllPartitions(next + 1, n, current, out);
  current.pop_back();
}

}  // namespace

Family ParseFamily(std::string_view tag) {
  if (tag == "boolean") return Family::kBoolean;
  if (tag == "partition") return Family::kPartition;
  if (tag == "chain") return Family::kChain;
  if (tag == "w6") return Family::kW6;
  if (tag == "n5") return Family::kN5;
  if (tag == "coordinate-arrangement") return Family::kCoordinateArrangement;
  if (tag == "braid-arrangement") return Family::kBraidArrangement;
  throw Error(ErrorKind::kUnknownFamily, "unknown family '" +
                                             std::string(tag) + "'");
}

Lattice BooleanLattice(std::size_t n) {
  RequireRange("boolean", n, 0, 6);
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::string> names;
  std::vector<CoverPair> covers;
  for (std::size_t s = 0; s < m; ++s) {
    std::string name;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) name += std::to_string(i + 1);
    }
    names.push_back(name.empty() ? "0" : name);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1)) {
        covers.emplace_back(static_cast<Element>(s),
                            static_cast<Element>(s | std::size_t{1} << i));
      }
    }
  }
  return Lattice::FromPoset(Poset::Build(std::move(names), covers));
}

Lattice PartitionLattice(std::size_t n) {
  RequireRange("partition", n, 1, 5);
  std::vector<Blocks> parts;
  Blocks scratch;
  AllPartitions(1, static_cast<int>(n), scratch, parts);
  for (auto& p : parts) p = Canonical(p);
  // Finest first, then by name.
  std::sort(parts.begin(), parts.end(), [](const Blocks& a, const Blocks& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return BlockName(a) < BlockName(b);
  });
  std::map<std::string, Element> id;
  std::vector<std::string> names;
  for (const auto& p : parts) {
    id.emplace(BlockName(p), static_cast<Element>(names.size()));
    names.push_back(BlockName(p));
  }
  std::vector<CoverPair> covers;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        Blocks merged;
        for (std::size_t k = 0; k < p.size(); ++k) {
          if (k != i && k != j) merged.push_back(p[k]);
        }
        std::vector<int> both = p[i];
        both.insert(both.end(), p[j].begin(), p[j].end());
        merged.push_back(both);
        covers.emplace_back(id.at(BlockName(p)),
                            id.at(BlockName(Canonical(merged))));
      }
    }
  }
  return Lattice::FromPoset(Poset::Build(std::move(names), covers));
}

Lattice ChainLattice(std::size_t n) {
  RequireRange("chain", n, 1, 28);
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i + 2 < n; ++i) names.emplace_back(1, char('a' + i));
  if (n > 1) names.emplace_back("1");
  std::vector<CoverPair> covers;
  for (Element i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Lattice::FromPoset(Poset::Build(std::move(names), covers));
}

Lattice W6Lattice() {
  const std::vector<CoverPair> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4},
                                      {3, 4}, {2, 5}, {4, 5}};
  return Lattice::FromPoset(
      Poset::Build({"0", "a", "b", "c", "d", "1"}, covers));
}

Lattice N5Lattice() {
  const std::vector<CoverPair> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return Lattice::FromPoset(Poset::Build({"0", "a", "b", "c", "1"}, covers));
}

CentralArrangement CoordinateArrangement(std::size_t n) {
  RequireRange("coordinate-arrangement", n, 1, 12);
  std::vector<IntVector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n, 0);
    v[i] = 1;
    normals.push_back(std::move(v));
  }
  return CentralArrangement(n, std::move(normals));
}

CentralArrangement BraidArrangement(std::size_t n) {
  RequireRange("braid-arrangement", n, 2, 6);
  std::vector<IntVector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IntVector v(n, 0);
      v[i] = 1;
      v[j] = -1;
      normals.push_back(std::move(v));
    }
  }
  return CentralArrangement(n, std::move(normals));
}

Generated Generate(Family family, std::size_t n) {
  switch (family) {
    case Family::kBoolean: return BooleanLattice(n);
    case Family::kPartition: return PartitionLattice(n);
    case Family::kChain: return ChainLattice(n);
    case Family::kW6: return W6Lattice();
    case Family::kN5: return N5Lattice();
    case Family::kCoordinateArrangement: return CoordinateArrangement(n);
    case Family::kBraidArrangement: return BraidArrangement(n);
  }
  throw Error(ErrorKind::kUnknownFamily, "unknown family");
}

}  // namespace geolattice
