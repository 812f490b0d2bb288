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

#include "geolattice/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "geolattice/error.hpp"
#include "geolattice/parallel.hpp"

namespace geolattice {
namespace {

// A poset on 0..k-1 stored as its order matrix. Ids always form a linear
// extension.
struct OrderMatrix {
  std::size_t k = 0;
  std::vector<char> leq;

  bool Leq(std::size_t u, std::size_t v) const { return leq[u * k + v] != 0; }
  bool Less(std::size_t u, std::size_t v) const { return u != v && Leq(u, v); }
  bool Covers(std::size_t u, std::size_t v) const {
    if (!Less(u, v)) return false;
    for (std::size_t w = 0; w < k; ++w) {
      if (Less(u, w) && Less(w, v)) return false;
    }
    return true;
  }
};

OrderMatrix FromPoset(const Poset& p) {
  OrderMatrix m{p.size(), std::vector<char>(p.size() * p.size())};
  for (Element u = 0; u < p.size(); ++u) {
    for (Element v = 0; v < p.size(); ++v) m.leq[u * m.k + v] = p.Leq(u, v);
  }
  return m;
}

using Invariant = std::tuple<int, int, int, int>;

class Canonizer {
 public:
  explicit Canonizer(const OrderMatrix& m) : m_(m) {
    inv_.resize(m.k);
    for (std::size_t x = 0; x < m.k; ++x) {
      int below = 0, above = 0, lower = 0, upper = 0;
      for (std::size_t y = 0; y < m.k; ++y) {
        below += m.Less(y, x);
        above += m.Less(x, y);
        lower += m.Covers(y, x);
        upper += m.Covers(x, y);
      }
      inv_[x] = {below, above, lower, upper};
    }
    slot_inv_ = inv_;
    std::sort(slot_inv_.begin(), slot_inv_.end());
  }

  std::string Run() {
    placed_.clear();
    used_.assign(m_.k, false);
    best_.clear();
    current_.clear();
    Search(0);
    std::string out;
    for (const auto& [a, b, c, d] : slot_inv_) {
      out += std::to_string(a) + "." + std::to_string(b) + "." +
             std::to_string(c) + "." + std::to_string(d) + ";";
    }
    return out + "|" + best_;
  }

 private:
  // Extends the current prefix one slot at a time, abandoning any prefix that
  // already compares greater than the best complete code.
  void Search(std::size_t pos) {
    if (pos == m_.k) {
      if (best_.empty() || current_ < best_) best_ = current_;
      return;
    }
    for (std::size_t x = 0; x < m_.k; ++x) {
      if (used_[x] || inv_[x] != slot_inv_[pos]) continue;
      const std::size_t mark = current_.size();
      for (std::size_t prev : placed_) {
        current_ += m_.Leq(prev, x) ? '1' : '0';
        current_ += m_.Leq(x, prev) ? '1' : '0';
      }
      if (best_.empty() ||
          current_.compare(0, current_.size(), best_, 0, current_.size()) <= 0) {
        used_[x] = true;
        placed_.push_back(x);
        Search(pos + 1);
        placed_.pop_back();
        used_[x] = false;
      }
      current_.resize(mark);
    }
  }

  const OrderMatrix& m_;
  std::vector<Invariant> inv_;
  std::vector<Invariant> slot_inv_;
  std::vector<std::size_t> placed_;
  std::vector<bool> used_;
  std::string best_;
  std::string current_;
};

std::string Canonical(const OrderMatrix& m) { return Canonizer(m).Run(); }

// All unlabeled posets on k elements, each stored with ids forming a linear
// extension.
std::vector<std::vector<OrderMatrix>> PosetsUpTo(std::size_t k_max) {
  std::vector<std::vector<OrderMatrix>> levels{{OrderMatrix{}}};
  for (std::size_t k = 0; k < k_max; ++k) {
    std::vector<OrderMatrix> next;
    std::unordered_set<std::string> seen;
    for (const OrderMatrix& p : levels[k]) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        bool ideal = true;
        for (std::size_t i = 0; i < k && ideal; ++i) {
          if (!(mask >> i & 1)) continue;
          for (std::size_t j = 0; j < k; ++j) {
            if (p.Leq(j, i) && !(mask >> j & 1)) {
              ideal = false;
              break;
            }
          }
        }
        if (!ideal) continue;
        OrderMatrix q{k + 1, std::vector<char>((k + 1) * (k + 1), 0)};
        for (std::size_t u = 0; u < k; ++u) {
          for (std::size_t v = 0; v < k; ++v) {
            q.leq[u * (k + 1) + v] = p.leq[u * k + v];
          }
          q.leq[u * (k + 1) + k] = (mask >> u & 1) ? 1 : 0;
        }
        q.leq[k * (k + 1) + k] = 1;
        if (seen.insert(Canonical(q)).second) next.push_back(std::move(q));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::optional<Lattice> BoundedLattice(const OrderMatrix& interior) {
  const std::size_t k = interior.k;
  const Element bottom = 0;
  const auto top = static_cast<Element>(k + 1);
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, char('a' + i));
  names.emplace_back("1");

  std::vector<CoverPair> covers;
  if (k == 0) covers.emplace_back(bottom, top);
  for (std::size_t u = 0; u < k; ++u) {
    bool minimal = true, maximal = true;
    for (std::size_t v = 0; v < k; ++v) {
      if (interior.Less(v, u)) minimal = false;
      if (interior.Less(u, v)) maximal = false;
      if (interior.Covers(u, v)) {
        covers.emplace_back(static_cast<Element>(u + 1),
                            static_cast<Element>(v + 1));
      }
    }
    if (minimal) covers.emplace_back(bottom, static_cast<Element>(u + 1));
    if (maximal) covers.emplace_back(static_cast<Element>(u + 1), top);
  }
  try {
    return Lattice::FromPoset(Poset::Build(std::move(names), covers));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotALattice) return std::nullopt;
    throw;
  }
}

}  // namespace

std::string CanonicalForm(const Poset& poset) {
  return Canonical(FromPoset(poset));
}

bool Isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && CanonicalForm(a) == CanonicalForm(b);
}

std::vector<Lattice> EnumerateLattices(std::size_t max_elements) {
  if (max_elements > kMaxEnumerationElements) {
    throw Error(ErrorKind::kBudgetExceeded,
                "enumeration is limited to " +
                    std::to_string(kMaxEnumerationElements) + " elements");
  }
  std::vector<Lattice> out;
  if (max_elements == 0) return out;
  out.push_back(Lattice::FromPoset(Poset::Build({"0"}, {})));
  if (max_elements == 1) return out;
  const auto levels = PosetsUpTo(max_elements - 2);
  for (const auto& level : levels) {
    for (const OrderMatrix& interior : level) {
      if (auto lat = BoundedLattice(interior)) out.push_back(std::move(*lat));
    }
  }
  return out;
}

CorpusReport EnumerateAndVerify(std::size_t max_elements,
                                const RunOptions& options) {
  const std::vector<Lattice> lattices = EnumerateLattices(max_elements);
  CorpusReport report;
  report.max_elements = max_elements;
  report.total = lattices.size();
  report.entries.resize(lattices.size());

  RunOptions inner = options;
  inner.threads = 1;
  ParallelFor(lattices.size(), options.threads, [&](std::size_t i) {
    const Lattice& lat = lattices[i];
    CorpusEntry& e = report.entries[i];
    e.index = i;
    e.elements = lat.size();
    e.atoms = lat.atom_count();
    try {
      const CharacterizationReport r = Characterize(lat, Mode::kBoth, inner);
      e.atomic = r.atomic;
      e.geometric = r.geometric;
      if (r.orderings) {
        e.orderings_tested = r.orderings->verdicts.size();
        e.failing_orderings = r.orderings->failures;
      }
      e.witness_verified = r.witness.has_value();
      e.agreement = r.agreement;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kInternal) throw;
      e.atomic = true;
      e.agreement = false;
    }
  });

  for (const CorpusEntry& e : report.entries) {
    ++report.by_size[e.elements];
    if (!e.atomic) continue;
    ++report.atomic;
    if (e.geometric) {
      ++report.geometric;
    } else {
      ++report.atomic_non_geometric;
    }
    if (e.agreement == false) ++report.disagreements;
  }
  return report;
}

}  // namespace geolattice
