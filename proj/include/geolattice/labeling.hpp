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

#ifndef GEOLATTICE_LABELING_HPP_
#define GEOLATTICE_LABELING_HPP_

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geolattice/lattice.hpp"

namespace geolattice {

using Label = int;
using LabelSequence = std::vector<Label>;

// A bijection γ from the atoms of a lattice onto {1, ..., n}.
//
// The ordering keeps a pointer to its lattice; the lattice must outlive it.
class AtomOrdering {
 public:
  // `atoms_in_order[i]` receives label i + 1.
  static AtomOrdering FromSequence(const Lattice& lattice,
                                   std::span<const Element> atoms_in_order);
  // Comma-separated atom names in label order, e.g. "a,b,c".
  static AtomOrdering FromNames(const Lattice& lattice, std::string_view list);
  // Labels atoms by ascending id.
  static AtomOrdering Identity(const Lattice& lattice);

  const Lattice& lattice() const { return *lattice_; }
  std::size_t size() const { return sequence_.size(); }
  Label Gamma(Element atom) const;
  Element AtomWithLabel(Label label) const { return sequence_[label - 1]; }
  // Atoms in label order.
  const std::vector<Element>& sequence() const { return sequence_; }
  // γ(A(x)) as a bit set: bit (γ(a) - 1) is set for every atom a ≤ x.
  AtomSet GammaSupport(Element x) const { return gamma_support_[x]; }

 private:
  AtomOrdering() = default;

  const Lattice* lattice_ = nullptr;
  std::vector<Element> sequence_;
  std::vector<Label> gamma_;  // by atom index
  std::vector<AtomSet> gamma_support_;
};

// An assignment of a positive label to every Hasse edge of a lattice.
class EdgeLabeling {
 public:
  // `labels[i]` labels the i-th entry of lattice.poset().cover_pairs().
  EdgeLabeling(const Lattice& lattice, std::vector<Label> labels);
  // Hand-built labeling; every cover pair must be present.
  static EdgeLabeling FromMap(const Lattice& lattice,
                              const std::map<CoverPair, Label>& labels);

  const Lattice& lattice() const { return *lattice_; }
  // λ(x, y); fails with kValidationError unless x ⋖ y.
  Label operator()(Element x, Element y) const;
  std::span<const Label> labels() const { return labels_; }

 private:
  const Lattice* lattice_;
  std::vector<Label> labels_;
};

// λ_γ(x, y) = min(γ(A(y)) \ γ(A(x))). Fails with kEmptyLabelSet when some
// cover adds no new atom, which only happens in non-atomic lattices.
EdgeLabeling MinimalLabeling(const AtomOrdering& ordering);

LabelSequence ChainLabels(const EdgeLabeling& labeling, const Chain& chain);

struct DistinctLabelsResult {
  bool distinct = true;
  std::optional<Chain> violating_chain;
};

// Checks that the labels along every maximal chain of every interval are
// pairwise distinct. Intervals are visited in ascending (lo, hi) order.
DistinctLabelsResult CheckDistinctLabels(
    const EdgeLabeling& labeling, std::size_t chain_budget = kDefaultChainBudget);

}  // namespace geolattice

#endif  // GEOLATTICE_LABELING_HPP_
