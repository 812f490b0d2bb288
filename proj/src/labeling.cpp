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

#include "geolattice/labeling.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "geolattice/error.hpp"

namespace geolattice {

AtomOrdering AtomOrdering::FromSequence(
    const Lattice& lattice, std::span<const Element> atoms_in_order) {
  const std::size_t n = lattice.atom_count();
  if (atoms_in_order.size() != n) {
    throw Error(ErrorKind::kInvalidOrdering,
                "ordering lists " + std::to_string(atoms_in_order.size()) +
                    " atoms but the lattice has " + std::to_string(n));
  }
  AtomOrdering ord;
  ord.lattice_ = &lattice;
  ord.sequence_.assign(atoms_in_order.begin(), atoms_in_order.end());
  ord.gamma_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = ord.sequence_[i];
    const auto idx = a < lattice.size() ? lattice.AtomIndex(a) : std::nullopt;
    if (!idx) {
      throw Error(ErrorKind::kInvalidOrdering,
                  "element id " + std::to_string(a) + " is not an atom");
    }
    if (ord.gamma_[*idx] != 0) {
      throw Error(ErrorKind::kInvalidOrdering,
                  "atom '" + lattice.name(a) + "' listed twice");
    }
    ord.gamma_[*idx] = static_cast<Label>(i + 1);
  }
  ord.gamma_support_.assign(lattice.size(), 0);
  for (Element x = 0; x < lattice.size(); ++x) {
    AtomSet s = lattice.atom_support(x);
    while (s != 0) {
      const int i = std::countr_zero(s);
      s &= s - 1;
      ord.gamma_support_[x] |= AtomSet{1} << (ord.gamma_[i] - 1);
    }
  }
  return ord;
}

AtomOrdering AtomOrdering::FromNames(const Lattice& lattice,
                                     std::string_view list) {
  std::vector<Element> seq;
  std::size_t start = 0;
  while (start <= list.size() && !list.empty()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const std::string_view name = list.substr(start, end - start);
    const auto x = lattice.poset().Find(name);
    if (!x) {
      throw Error(ErrorKind::kInvalidOrdering,
                  "unknown atom name '" + std::string(name) + "'");
    }
    seq.push_back(*x);
    start = end + 1;
  }
  return FromSequence(lattice, seq);
}

AtomOrdering AtomOrdering::Identity(const Lattice& lattice) {
  const auto atoms = lattice.atoms();
  return FromSequence(lattice, atoms);
}

Label AtomOrdering::Gamma(Element atom) const {
  const auto idx = lattice_->AtomIndex(atom);
  if (!idx) {
    throw Error(ErrorKind::kInvalidOrdering,
                "'" + lattice_->name(atom) + "' is not an atom");
  }
  return gamma_[*idx];
}

EdgeLabeling::EdgeLabeling(const Lattice& lattice, std::vector<Label> labels)
    : lattice_(&lattice), labels_(std::move(labels)) {
  if (labels_.size() != lattice.poset().cover_pairs().size()) {
    throw Error(ErrorKind::kValidationError,
                "labeling must assign exactly one label per cover pair");
  }
  if (std::any_of(labels_.begin(), labels_.end(),
                  [](Label l) { return l < 1; })) {
    throw Error(ErrorKind::kValidationError, "labels must be positive");
  }
}

EdgeLabeling EdgeLabeling::FromMap(const Lattice& lattice,
                                   const std::map<CoverPair, Label>& labels) {
  const auto& covers = lattice.poset().cover_pairs();
  std::vector<Label> out;
  out.reserve(covers.size());
  for (const auto& c : covers) {
    const auto it = labels.find(c);
    if (it == labels.end()) {
      throw Error(ErrorKind::kValidationError,
                  "no label for cover (" + lattice.name(c.first) + "," +
                      lattice.name(c.second) + ")");
    }
    out.push_back(it->second);
  }
  if (labels.size() != covers.size()) {
    throw Error(ErrorKind::kValidationError,
                "label map contains pairs that are not covers");
  }
  return EdgeLabeling(lattice, std::move(out));
}

Label EdgeLabeling::operator()(Element x, Element y) const {
  const int idx = lattice_->poset().CoverIndex(x, y);
  if (idx < 0) {
    throw Error(ErrorKind::kValidationError,
                "(" + lattice_->name(x) + "," + lattice_->name(y) +
                    ") is not a cover pair");
  }
  return labels_[idx];
}

EdgeLabeling MinimalLabeling(const AtomOrdering& ordering) {
  const Lattice& lat = ordering.lattice();
  const auto& covers = lat.poset().cover_pairs();
  std::vector<Label> labels;
  labels.reserve(covers.size());
  for (const auto& [x, y] : covers) {
    const AtomSet fresh = ordering.GammaSupport(y) & ~ordering.GammaSupport(x);
    if (fresh == 0) {
      throw Error(ErrorKind::kEmptyLabelSet,
                  "A(" + lat.name(y) + ") \\ A(" + lat.name(x) + ") is empty");
    }
    labels.push_back(std::countr_zero(fresh) + 1);
  }
  return EdgeLabeling(lat, std::move(labels));
}

LabelSequence ChainLabels(const EdgeLabeling& labeling, const Chain& chain) {
  LabelSequence seq;
  if (chain.size() < 2) return seq;
  seq.reserve(chain.size() - 1);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    seq.push_back(labeling(chain[i], chain[i + 1]));
  }
  return seq;
}

DistinctLabelsResult CheckDistinctLabels(const EdgeLabeling& labeling,
                                         std::size_t chain_budget) {
  const Lattice& lat = labeling.lattice();
  for (Element lo = 0; lo < lat.size(); ++lo) {
    for (Element hi = 0; hi < lat.size(); ++hi) {
      if (!lat.Less(lo, hi)) continue;
      for (const Chain& c : MaximalChains(lat, lo, hi, chain_budget)) {
        LabelSequence seq = ChainLabels(labeling, c);
        std::sort(seq.begin(), seq.end());
        if (std::adjacent_find(seq.begin(), seq.end()) != seq.end()) {
          return {false, c};
        }
      }
    }
  }
  return {};
}

}  // namespace geolattice
