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

#include "geolattice/characterization.hpp"

#include <algorithm>
#include <bit>

#include "geolattice/error.hpp"
#include "geolattice/labeling.hpp"
#include "geolattice/parallel.hpp"

namespace geolattice {
namespace {

void RequireAtomic(const Lattice& lattice) {
  const AtomicityResult atomic = IsAtomic(lattice);
  if (!atomic.atomic) {
    throw Error(ErrorKind::kNotAtomic,
                "'" + lattice.name(*atomic.failing_element) +
                    "' is not a join of atoms");
  }
}

// n! or nullopt once it passes `cap`.
std::optional<std::uint64_t> BoundedFactorial(std::size_t n,
                                              std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f > cap) return std::nullopt;
  }
  return f;
}

bool ContainsAtom(const Lattice& lattice, AtomSet set, Element atom) {
  return (set >> *lattice.AtomIndex(atom) & 1) != 0;
}

}  // namespace

OrderingsResult AllOrderingsEl(const Lattice& lattice,
                               const RunOptions& options) {
  RequireAtomic(lattice);
  const std::size_t n = lattice.atom_count();
  if (!BoundedFactorial(n, options.ordering_budget)) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(n) + "! atom orderings exceed the budget of " +
                    std::to_string(options.ordering_budget));
  }

  std::vector<std::vector<Element>> perms;
  std::vector<Element> perm(lattice.atoms().begin(), lattice.atoms().end());
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const ElVerifier verifier(lattice, options.chain_budget);
  OrderingsResult result;
  result.verdicts.resize(perms.size());
  ParallelFor(perms.size(), options.threads, [&](std::size_t i) {
    const AtomOrdering ordering = AtomOrdering::FromSequence(lattice, perms[i]);
    result.verdicts[i].ordering = perms[i];
    result.verdicts[i].passes = verifier.Passes(MinimalLabeling(ordering));
  });

  for (std::size_t i = 0; i < result.verdicts.size(); ++i) {
    if (result.verdicts[i].passes) continue;
    ++result.failures;
    if (!result.first_failing_index) {
      result.first_failing_index = i;
      const AtomOrdering ordering =
          AtomOrdering::FromSequence(lattice, result.verdicts[i].ordering);
      result.first_failing_interval =
          verifier.Verify(MinimalLabeling(ordering)).first_failure;
    }
  }
  return result;
}

WitnessCertificate ConstructWitness(const Lattice& lattice,
                                    const DiamondFailure& failure,
                                    std::size_t chain_budget) {
  RequireAtomic(lattice);
  if (!IsValidDiamondFailure(lattice, failure)) {
    throw Error(ErrorKind::kValidationError,
                "(" + lattice.name(failure.x) + "," + lattice.name(failure.y) +
                    ") is not a diamond-property failure");
  }
  WitnessCertificate cert;
  cert.failure = failure;
  DiamondFailure& f = cert.failure;
  if (f.x_covered) {
    std::swap(f.x, f.y);
    std::swap(f.x_covered, f.y_covered);
  }

  const auto atoms = lattice.atoms();
  // A(meet) ⊆ A(y), so any atom of A(x) \ A(y) is also outside A(meet).
  const AtomSet x_only = lattice.atom_support(f.x) & ~lattice.atom_support(f.y);
  if (x_only == 0) {
    throw Error(ErrorKind::kInternal, "A(x) is contained in A(y)");
  }
  cert.a_x = atoms[std::countr_zero(x_only)];

  std::optional<Element> a_y;
  for (Element a : atoms) {
    if (ContainsAtom(lattice, lattice.atom_support(f.y), a) &&
        lattice.Join(f.meet, a) == f.y) {
      a_y = a;
      break;
    }
  }
  if (!a_y) {
    throw Error(ErrorKind::kInternal, "no atom a with (x^y) v a = y");
  }
  cert.a_y = *a_y;

  cert.ordering = {cert.a_x, cert.a_y};
  for (Element a : atoms) {
    if (a != cert.a_x && a != cert.a_y) cert.ordering.push_back(a);
  }

  const AtomOrdering ordering = AtomOrdering::FromSequence(lattice, cert.ordering);
  const EdgeLabeling labeling = MinimalLabeling(ordering);
  IntervalVerdict verdict =
      VerifyInterval(labeling, f.meet, f.join, chain_budget);
  cert.interval_status = verdict.status;
  cert.lex_min_chain = std::move(verdict.lex_min_chain);

  const auto problems = WitnessViolations(lattice, cert, chain_budget);
  if (!problems.empty()) {
    std::string msg = "witness certificate does not verify:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw Error(ErrorKind::kInternal, msg);
  }
  return cert;
}

std::vector<std::string> WitnessViolations(const Lattice& lattice,
                                           const WitnessCertificate& cert,
                                           std::size_t chain_budget) {
  std::vector<std::string> out;
  const DiamondFailure& f = cert.failure;
  if (!IsValidDiamondFailure(lattice, f)) {
    out.push_back("(x,y) is not a diamond failure");
    return out;
  }
  if (lattice.Covers(f.x, f.join)) out.push_back("x is covered by x v y");

  const auto is_atom = [&](Element a) {
    return a < lattice.size() && lattice.AtomIndex(a).has_value();
  };
  if (!is_atom(cert.a_x) || !is_atom(cert.a_y)) {
    out.push_back("a_x or a_y is not an atom");
    return out;
  }
  if (!lattice.Leq(cert.a_x, f.x) || lattice.Leq(cert.a_x, f.meet)) {
    out.push_back("a_x not in A(x) \\ A(x^y)");
  }
  if (lattice.Leq(cert.a_x, f.y)) out.push_back("a_x in A(y)");
  if (!lattice.Leq(cert.a_y, f.y)) out.push_back("a_y not in A(y)");
  if (lattice.Join(f.meet, cert.a_y) != f.y) {
    out.push_back("(x^y) v a_y != y");
  }
  if (cert.a_x == cert.a_y) out.push_back("a_x == a_y");
  for (Element z : lattice.poset().UpperCovers(f.x)) {
    if (lattice.Leq(cert.a_y, z)) {
      out.push_back("a_y lies below '" + lattice.name(z) + "', a cover of x");
    }
  }

  if (cert.ordering.size() < 2 || cert.ordering[0] != cert.a_x ||
      cert.ordering[1] != cert.a_y) {
    out.push_back("ordering does not start a_x, a_y");
    return out;
  }
  const AtomOrdering ordering =
      AtomOrdering::FromSequence(lattice, cert.ordering);
  const EdgeLabeling labeling = MinimalLabeling(ordering);
  if (labeling(f.meet, f.x) != 1) out.push_back("label of (x^y, x) is not 1");

  const auto chains = MaximalChains(lattice, f.meet, f.join, chain_budget);
  LabelSequence best;
  bool first = true;
  for (const Chain& c : chains) {
    LabelSequence s = ChainLabels(labeling, c);
    if (first || LexCompare(s, best) < 0) best = std::move(s);
    first = false;
  }
  const ChainCertificate& lm = cert.lex_min_chain;
  if (lm.chain.size() < 3 || lm.chain.front() != f.meet ||
      lm.chain[1] != f.x || lm.chain.back() != f.join) {
    out.push_back("lex-min chain does not run x^y, x, ..., x v y");
  }
  if (std::find(chains.begin(), chains.end(), lm.chain) == chains.end()) {
    out.push_back("lex-min chain is not a maximal chain of the interval");
  } else if (ChainLabels(labeling, lm.chain) != best || lm.labels != best) {
    out.push_back("chain is not lexicographically smallest");
  }
  if (!FirstDescent(lm.labels) || lm.descent_position != FirstDescent(lm.labels)) {
    out.push_back("lex-min chain has no descent");
  }
  if (VerifyInterval(labeling, f.meet, f.join, chain_budget).status ==
          IntervalStatus::kOk ||
      cert.interval_status == IntervalStatus::kOk) {
    out.push_back("interval [x^y, x v y] passes");
  }
  return out;
}

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kExhaustive: return "exhaustive";
    case Mode::kWitness: return "witness";
    case Mode::kBoth: return "both";
  }
  return "unknown";
}

std::optional<Mode> ParseMode(std::string_view text) {
  if (text == "exhaustive") return Mode::kExhaustive;
  if (text == "witness") return Mode::kWitness;
  if (text == "both") return Mode::kBoth;
  return std::nullopt;
}

CharacterizationReport Characterize(const Lattice& lattice, Mode mode,
                                    const RunOptions& options) {
  CharacterizationReport report;
  report.mode = mode;
  const GeometricReport geo = IsGeometric(lattice);
  report.atomic = geo.atomic;
  report.non_atomic_element = geo.non_atomic_element;
  report.geometric = geo.geometric;
  report.diamond_failure = geo.diamond_failure;
  if (!geo.atomic) return report;

  bool agrees = true;
  if (mode != Mode::kWitness) {
    report.orderings = AllOrderingsEl(lattice, options);
    agrees = agrees && (geo.geometric == report.orderings->all_pass());
  }
  if (mode != Mode::kExhaustive && !geo.geometric) {
    report.witness =
        ConstructWitness(lattice, *geo.diamond_failure, options.chain_budget);
    agrees = agrees && report.witness->interval_status != IntervalStatus::kOk &&
             report.witness->lex_min_chain.descent_position.has_value();
  }
  report.agreement = agrees;
  return report;
}

}  // namespace geolattice
