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

#include "geolattice/el_verifier.hpp"

#include <algorithm>

#include "geolattice/error.hpp"

namespace geolattice {
namespace {

// Strict order on certificates: label sequence first, then element ids.
bool CertLess(const ChainCertificate& a, const ChainCertificate& b) {
  const auto c = LexCompare(a.labels, b.labels);
  if (c != 0) return c < 0;
  return a.chain < b.chain;
}

bool SequencesPass(std::span<const LabelSequence> seqs) {
  std::size_t rising = seqs.size();
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (IsRising(seqs[i])) {
      if (rising != seqs.size()) return false;
      rising = i;
    }
  }
  if (rising == seqs.size()) return false;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (i != rising && LexCompare(seqs[rising], seqs[i]) >= 0) return false;
  }
  return true;
}

}  // namespace

std::string_view StatusName(IntervalStatus status) {
  switch (status) {
    case IntervalStatus::kOk: return "OK";
    case IntervalStatus::kNoRisingChain: return "NoRisingChain";
    case IntervalStatus::kMultipleRisingChains: return "MultipleRisingChains";
    case IntervalStatus::kRisingNotLexMin: return "RisingNotLexMin";
  }
  return "Unknown";
}

bool IsRising(std::span<const Label> seq) { return !FirstDescent(seq); }

std::optional<std::size_t> FirstDescent(std::span<const Label> seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] > seq[i + 1]) return i + 1;
  }
  return std::nullopt;
}

std::strong_ordering LexCompare(std::span<const Label> a,
                                std::span<const Label> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

ChainCertificate CertifyChain(const EdgeLabeling& labeling, Chain chain) {
  ChainCertificate cert;
  cert.labels = ChainLabels(labeling, chain);
  cert.chain = std::move(chain);
  cert.descent_position = FirstDescent(cert.labels);
  cert.is_rising = !cert.descent_position;
  return cert;
}

IntervalVerdict ClassifyInterval(const EdgeLabeling& labeling, Element lo,
                                 Element hi, std::span<const Chain> chains) {
  if (chains.empty()) {
    throw Error(ErrorKind::kValidationError, "interval has no chains");
  }
  IntervalVerdict v;
  v.lo = lo;
  v.hi = hi;
  v.chains.reserve(chains.size());
  for (const Chain& c : chains) {
    v.chains.push_back(CertifyChain(labeling, c));
    if (v.chains.back().is_rising) v.rising_chains.push_back(v.chains.back());
  }
  v.lex_min_chain = *std::min_element(v.chains.begin(), v.chains.end(),
                                      CertLess);

  if (v.rising_chains.empty()) {
    v.status = IntervalStatus::kNoRisingChain;
  } else if (v.rising_chains.size() > 1) {
    std::sort(v.rising_chains.begin(), v.rising_chains.end(), CertLess);
    v.status = IntervalStatus::kMultipleRisingChains;
  } else {
    const ChainCertificate& rising = v.rising_chains.front();
    const ChainCertificate* undercut = nullptr;
    for (const ChainCertificate& c : v.chains) {
      if (c.chain == rising.chain) continue;
      if (LexCompare(c.labels, rising.labels) <= 0 &&
          (undercut == nullptr || CertLess(c, *undercut))) {
        undercut = &c;
      }
    }
    if (undercut != nullptr) {
      v.status = IntervalStatus::kRisingNotLexMin;
      v.undercutting_chain = *undercut;
    }
  }
  return v;
}

IntervalVerdict VerifyInterval(const EdgeLabeling& labeling, Element lo,
                               Element hi, std::size_t chain_budget) {
  const Lattice& lat = labeling.lattice();
  if (!lat.Less(lo, hi)) {
    throw Error(ErrorKind::kValidationError,
                "verify_interval needs lo < hi");
  }
  const auto chains = MaximalChains(lat, lo, hi, chain_budget);
  return ClassifyInterval(labeling, lo, hi, chains);
}

ElVerifier::ElVerifier(const Lattice& lattice, std::size_t chain_budget)
    : lattice_(&lattice) {
  for (Element lo = 0; lo < lattice.size(); ++lo) {
    for (Element hi = 0; hi < lattice.size(); ++hi) {
      if (!lattice.Less(lo, hi)) continue;
      intervals_.push_back(
          {lo, hi, MaximalChains(lattice, lo, hi, chain_budget)});
    }
  }
}

bool ElVerifier::Passes(const EdgeLabeling& labeling) const {
  if (&labeling.lattice() != lattice_) {
    throw Error(ErrorKind::kValidationError,
                "labeling belongs to a different lattice");
  }
  std::vector<LabelSequence> seqs;
  for (const IntervalChains& iv : intervals_) {
    seqs.clear();
    for (const Chain& c : iv.chains) seqs.push_back(ChainLabels(labeling, c));
    if (!SequencesPass(seqs)) return false;
  }
  return true;
}

ElReport ElVerifier::Verify(const EdgeLabeling& labeling,
                            bool collect_all) const {
  if (&labeling.lattice() != lattice_) {
    throw Error(ErrorKind::kValidationError,
                "labeling belongs to a different lattice");
  }
  ElReport report;
  std::vector<LabelSequence> seqs;
  for (const IntervalChains& iv : intervals_) {
    if (!collect_all) {
      seqs.clear();
      for (const Chain& c : iv.chains) seqs.push_back(ChainLabels(labeling, c));
      if (SequencesPass(seqs)) continue;
    }
    IntervalVerdict v = ClassifyInterval(labeling, iv.lo, iv.hi, iv.chains);
    if (v.status != IntervalStatus::kOk && report.is_el) {
      report.is_el = false;
      report.first_failure = v;
      if (!collect_all) return report;
    }
    if (collect_all) report.verdicts.push_back(std::move(v));
  }
  return report;
}

ElReport VerifyEl(const EdgeLabeling& labeling, bool collect_all,
                  std::size_t chain_budget) {
  return ElVerifier(labeling.lattice(), chain_budget)
      .Verify(labeling, collect_all);
}

}  // namespace geolattice
