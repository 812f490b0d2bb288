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

#include "geolattice/cli.hpp"

#include <functional>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "geolattice/arrangement.hpp"
#include "geolattice/catalog.hpp"
#include "geolattice/characterization.hpp"
#include "geolattice/enumerate.hpp"
#include "geolattice/error.hpp"
#include "geolattice/io.hpp"
#include "geolattice/matroid.hpp"
#include "geolattice/mobius.hpp"
#include "geolattice/report.hpp"

namespace geolattice {
namespace {

using nlohmann::json;

struct Options {
  unsigned threads = 0;
  std::uint64_t budget = 40320;
  std::size_t chain_budget = kDefaultChainBudget;
  bool verbose = false;

  std::string lattice_path;
  std::string arrangement_path;
  std::string mode = "both";
  std::string ordering;
  bool oracle = false;
  std::size_t max_elements = 8;
  std::string report_path;
  std::string matroid_check = "closure";
  std::string family;
  std::size_t n = 0;
  std::string out_path;

  RunOptions run() const { return {budget, chain_budget, threads}; }
};

void Emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int CmdCheck(const Options& o, std::ostream& out, std::ostream& err) {
  const Lattice lat = LoadLattice(o.lattice_path);
  const GeometricReport r = IsGeometric(lat);
  Emit(out, ToJson(lat, r));
  if (o.verbose) {
    err << lat.size() << " elements, " << lat.atom_count() << " atoms: "
        << (r.geometric ? "geometric" : "not geometric") << " ("
        << ReasonName(r.reason) << ")\n";
  }
  return kExitOk;
}

int CmdCharacterize(const Options& o, Mode mode, std::ostream& out,
                    std::ostream& err) {
  const Lattice lat = LoadLattice(o.lattice_path);
  if (!o.ordering.empty()) {
    const AtomOrdering ord = AtomOrdering::FromNames(lat, o.ordering);
    const ElReport r = VerifyEl(MinimalLabeling(ord), false, o.chain_budget);
    json j = ToJson(lat, r);
    j["ordering"] = json::array();
    for (Element a : ord.sequence()) j["ordering"].push_back(lat.name(a));
    Emit(out, j);
    if (o.verbose) {
      err << "ordering " << o.ordering << ": "
          << (r.is_el ? "EL-labeling" : "not an EL-labeling") << "\n";
    }
    return kExitOk;
  }
  const CharacterizationReport r = Characterize(lat, mode, o.run());
  Emit(out, ToJson(lat, r));
  if (o.verbose) {
    err << (r.atomic ? (r.geometric ? "geometric" : "atomic, not geometric")
                     : "not atomic; characterization does not apply");
    if (r.orderings) {
      err << "; " << r.orderings->verdicts.size() - r.orderings->failures
          << "/" << r.orderings->verdicts.size() << " orderings EL";
    }
    if (r.witness) err << "; witness verified";
    err << "\n";
  }
  return r.agreement == false ? kExitContradiction : kExitOk;
}

int CmdMobius(const Options& o, std::ostream& out, std::ostream& err) {
  const Lattice lat = LoadLattice(o.lattice_path);
  const MobiusTable mu = Mobius(lat);
  json j = ToJson(mu);
  int code = kExitOk;
  if (!o.ordering.empty()) {
    const AtomOrdering ord = AtomOrdering::FromNames(lat, o.ordering);
    const MobiusTable falling = MobiusViaFallingChains(ord, o.chain_budget);
    bool agree = true;
    for (Element x = 0; x < lat.size(); ++x) {
      for (Element y = 0; y < lat.size(); ++y) {
        if (lat.Leq(x, y) && mu(x, y) != falling(x, y)) agree = false;
      }
    }
    j["falling_chains_agree"] = agree;
    if (!agree) code = kExitContradiction;
  }
  Emit(out, j);
  if (o.verbose) {
    err << "mu(" << lat.name(lat.bottom()) << "," << lat.name(lat.top())
        << ") = " << mu(lat.bottom(), lat.top()) << "\n";
  }
  return code;
}

int CmdRegions(const Options& o, std::ostream& out, std::ostream& err) {
  const CentralArrangement arr = LoadArrangement(o.arrangement_path);
  json j{{"formula", RegionCount(arr)}};
  int code = kExitOk;
  if (o.oracle) {
    j["oracle"] = RegionOracle(arr);
    if (j["oracle"] != j["formula"]) code = kExitContradiction;
  }
  Emit(out, j);
  if (o.verbose) err << "regions: " << j.dump() << "\n";
  return code;
}

int CmdEnumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const CorpusReport r = EnumerateAndVerify(o.max_elements, o.run());
  json full = ToJson(r);
  if (!o.report_path.empty()) WriteFile(o.report_path, full.dump(2) + "\n");
  full.erase("entries");
  Emit(out, full);
  if (o.verbose) {
    err << r.total << " lattices, " << r.atomic << " atomic, " << r.geometric
        << " geometric, " << r.disagreements << " disagreements\n";
  }
  return r.disagreements == 0 ? kExitOk : kExitContradiction;
}

json AtomJson(const Lattice& lat, AtomSet s) { return AtomNames(lat, s); }

int CmdMatroid(const Options& o, std::ostream& out, std::ostream& err) {
  const Lattice lat = LoadLattice(o.lattice_path);
  const MatroidClosure cl = MatroidClosure::FromLattice(lat);
  json j;
  if (o.matroid_check == "closure") {
    const auto bad = CheckClosureAxioms(cl);
    j["closure_axioms"] = !bad.has_value();
    json table = json::array();
    for (AtomSet w = 0; w < (AtomSet{1} << cl.ground_size()); ++w) {
      table.push_back({{"W", AtomJson(lat, w)}, {"cl", AtomJson(lat, cl(w))}});
    }
    j["closure"] = table;
  } else if (o.matroid_check == "exchange") {
    const auto bad = FindExchangeViolation(cl);
    j["exchange"] = !bad.has_value();
    if (bad) {
      j["violation"] = {{"W", AtomJson(lat, bad->w)},
                        {"a", lat.name(lat.atoms()[bad->a])},
                        {"b", lat.name(lat.atoms()[bad->b])}};
    }
  } else if (o.matroid_check == "complex") {
    j = ToJson(lat, IndependenceComplex(cl));
  } else {
    const ShellingSweep sweep =
        ShellAllVertexOrders(IndependenceComplex(cl), o.threads);
    j = {{"orders_tested", sweep.orders_tested},
         {"failures", sweep.failures},
         {"all_shellings", sweep.failures == 0}};
    if (sweep.first_failure) {
      j["first_failure"] = ToJson(lat, *sweep.first_failure);
    }
  }
  Emit(out, j);
  if (o.verbose) err << o.matroid_check << ": " << j.dump() << "\n";
  return kExitOk;
}

int CmdGen(const Options& o, std::ostream& out, std::ostream&) {
  const Generated g = Generate(ParseFamily(o.family), o.n);
  const json j = std::visit(
      [](const auto& v) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Lattice>) {
          return LatticeToJson(v.poset());
        } else {
          return ArrangementToJson(v);
        }
      },
      g);
  if (o.out_path.empty()) {
    Emit(out, j);
  } else {
    WriteFile(o.out_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Geometric lattice verification toolkit", "geolattice"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  app.add_option("--budget", o.budget, "Maximum atom orderings per lattice");
  app.add_option("--chain-budget", o.chain_budget,
                 "Maximum maximal chains per interval");
  app.add_flag("--verbose", o.verbose, "Human-readable summary on stderr");

  const std::vector<std::string> mode_names{"exhaustive", "witness", "both"};

  auto* check = app.add_subcommand("check", "Atomicity, gradedness and geometricity");
  check->add_option("--lattice", o.lattice_path)->required();

  auto* characterize =
      app.add_subcommand("characterize", "Check the characterization on one lattice");
  characterize->add_option("--lattice", o.lattice_path)->required();
  characterize->add_option("--mode", o.mode)
      ->check(CLI::IsMember(mode_names));
  characterize->add_option("--ordering", o.ordering,
                           "Verify one ordering given as comma-separated atoms");

  auto* witness = app.add_subcommand("witness", "Construct a failing atom ordering");
  witness->add_option("--lattice", o.lattice_path)->required();

  auto* mobius = app.add_subcommand("mobius", "Mobius function of a lattice");
  mobius->add_option("--lattice", o.lattice_path)->required();
  mobius->add_option("--ordering", o.ordering,
                     "Cross-check against falling chains of this ordering");

  auto* regions = app.add_subcommand("regions", "Region count of a central arrangement");
  regions->add_option("--arrangement", o.arrangement_path)->required();
  regions->add_flag("--oracle", o.oracle, "Also run the sign-vector oracle");

  auto* enumerate = app.add_subcommand("enumerate", "Verify every small lattice");
  enumerate->add_option("--max-elements", o.max_elements)
      ->check(CLI::Range(std::size_t{0}, kMaxEnumerationElements));
  enumerate->add_option("--report", o.report_path, "Write the full report here");

  auto* matroid = app.add_subcommand("matroid", "Matroid of an atomic lattice");
  matroid->add_option("--lattice", o.lattice_path)->required();
  matroid->add_option("--check", o.matroid_check)
      ->check(CLI::IsMember({"closure", "exchange", "complex", "shelling-all"}));

  auto* gen = app.add_subcommand("gen", "Emit a named lattice or arrangement");
  gen->add_option("--family", o.family)->required();
  gen->add_option("--n", o.n);
  gen->add_option("--out", o.out_path);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return CmdCheck(o, out, err);
    if (*characterize) return CmdCharacterize(o, *ParseMode(o.mode), out, err);
    if (*witness) return CmdCharacterize(o, Mode::kWitness, out, err);
    if (*mobius) return CmdMobius(o, out, err);
    if (*regions) return CmdRegions(o, out, err);
    if (*enumerate) return CmdEnumerate(o, out, err);
    if (*matroid) return CmdMatroid(o, out, err);
    if (*gen) return CmdGen(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kInternal ? kExitContradiction
                                            : kExitInputError;
  }
  return kExitInputError;
}

}  // namespace geolattice
