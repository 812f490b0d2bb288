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

#include "geolattice/report.hpp"

namespace geolattice {
namespace {

using nlohmann::json;

json Names(const Lattice& lattice, const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(lattice.name(x));
  return out;
}

json Pair(const Lattice& lattice, std::pair<Element, Element> p) {
  return json::array({lattice.name(p.first), lattice.name(p.second)});
}

}  // namespace

json ToJson(const Lattice& lattice, const ChainCertificate& cert) {
  json j{{"chain", Names(lattice, cert.chain)},
         {"labels", cert.labels},
         {"rising", cert.is_rising}};
  j["descent_position"] =
      cert.descent_position ? json(*cert.descent_position) : json(nullptr);
  return j;
}

json ToJson(const Lattice& lattice, const IntervalVerdict& v) {
  json chains = json::array();
  for (const auto& c : v.chains) chains.push_back(ToJson(lattice, c));
  json rising = json::array();
  for (const auto& c : v.rising_chains) rising.push_back(ToJson(lattice, c));
  json j{{"interval", {{"lo", lattice.name(v.lo)}, {"hi", lattice.name(v.hi)}}},
         {"status", StatusName(v.status)},
         {"chains", chains},
         {"rising_chains", rising},
         {"lex_min_chain", ToJson(lattice, v.lex_min_chain)}};
  if (v.undercutting_chain) {
    j["undercutting_chain"] = ToJson(lattice, *v.undercutting_chain);
  }
  return j;
}

json ToJson(const Lattice& lattice, const ElReport& report) {
  json j{{"el", report.is_el}};
  j["first_failure"] = report.first_failure
                           ? ToJson(lattice, *report.first_failure)
                           : json(nullptr);
  if (!report.verdicts.empty()) {
    json all = json::array();
    for (const auto& v : report.verdicts) all.push_back(ToJson(lattice, v));
    j["verdicts"] = all;
  }
  return j;
}

json ToJson(const Lattice& lattice, const DiamondFailure& f) {
  return {{"kind", "DiamondFailure"},
          {"x", lattice.name(f.x)},
          {"y", lattice.name(f.y)},
          {"meet", lattice.name(f.meet)},
          {"join", lattice.name(f.join)},
          {"x_covered", f.x_covered},
          {"y_covered", f.y_covered}};
}

json ToJson(const Lattice& lattice, const GeometricReport& r) {
  json j{{"atomic", r.atomic},
         {"graded", r.graded},
         {"semimodular", r.semimodular},
         {"diamond", r.diamond},
         {"geometric", r.geometric}};
  if (r.reason == GeometricReason::kNotAtomic) {
    j["failure"] = {{"kind", "NotAtomic"},
                    {"element", lattice.name(*r.non_atomic_element)}};
  } else if (r.reason == GeometricReason::kDiamondFailure) {
    j["failure"] = ToJson(lattice, *r.diamond_failure);
  }
  if (r.graded) {
    json rank = json::object();
    for (Element x = 0; x < lattice.size(); ++x) rank[lattice.name(x)] = r.rank[x];
    j["rank"] = rank;
  } else {
    j["graded_failure"] = Pair(lattice, *r.graded_failure);
  }
  if (r.semimodular_violation) {
    j["semimodular_violation"] = Pair(lattice, *r.semimodular_violation);
  }
  return j;
}

json ToJson(const Lattice& lattice, const WitnessCertificate& cert) {
  const DiamondFailure& f = cert.failure;
  return {{"x", lattice.name(f.x)},
          {"y", lattice.name(f.y)},
          {"meet", lattice.name(f.meet)},
          {"join", lattice.name(f.join)},
          {"a_x", lattice.name(cert.a_x)},
          {"a_y", lattice.name(cert.a_y)},
          {"ordering", Names(lattice, cert.ordering)},
          {"interval",
           {{"lo", lattice.name(f.meet)}, {"hi", lattice.name(f.join)}}},
          {"interval_status", StatusName(cert.interval_status)},
          {"lex_min_chain", ToJson(lattice, cert.lex_min_chain)}};
}

json ToJson(const Lattice& lattice, const CharacterizationReport& r) {
  json j{{"atomic", r.atomic},
         {"geometric", r.geometric},
         {"mode", ModeName(r.mode)}};
  j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
  if (!r.atomic) {
    j["status"] = "NotAtomic";
    j["non_atomic_element"] = lattice.name(*r.non_atomic_element);
    return j;
  }
  j["status"] = r.geometric ? "Geometric" : "NonGeometric";
  if (r.diamond_failure) j["diamond_failure"] = ToJson(lattice, *r.diamond_failure);
  if (r.orderings) {
    const OrderingsResult& o = *r.orderings;
    json verdicts = json::array();
    for (const auto& v : o.verdicts) {
      verdicts.push_back({{"ordering", Names(lattice, v.ordering)},
                          {"el", v.passes}});
    }
    json orderings{{"tested", o.verdicts.size()},
                   {"failing", o.failures},
                   {"all_pass", o.all_pass()},
                   {"verdicts", verdicts}};
    if (o.first_failing_index) {
      orderings["first_failure"] = {
          {"ordering",
           Names(lattice, o.verdicts[*o.first_failing_index].ordering)},
          {"interval", ToJson(lattice, *o.first_failing_interval)}};
    }
    j["orderings"] = orderings;
  }
  if (r.witness) j["witness"] = ToJson(lattice, *r.witness);
  return j;
}

json ToJson(const CorpusReport& r) {
  json by_size = json::object();
  for (const auto& [size, count] : r.by_size) {
    by_size[std::to_string(size)] = count;
  }
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je{{"index", e.index},
            {"elements", e.elements},
            {"atoms", e.atoms},
            {"atomic", e.atomic},
            {"geometric", e.geometric},
            {"orderings_tested", e.orderings_tested},
            {"failing_orderings", e.failing_orderings},
            {"witness_verified", e.witness_verified}};
    je["agreement"] = e.agreement ? json(*e.agreement) : json(nullptr);
    entries.push_back(je);
  }
  return {{"max_elements", r.max_elements},
          {"total", r.total},
          {"by_size", by_size},
          {"atomic", r.atomic},
          {"geometric", r.geometric},
          {"atomic_non_geometric", r.atomic_non_geometric},
          {"disagreements", r.disagreements},
          {"entries", entries}};
}

json ToJson(const MobiusTable& table) {
  const Lattice& lat = table.lattice();
  json values = json::array();
  for (Element x = 0; x < lat.size(); ++x) {
    for (Element y = 0; y < lat.size(); ++y) {
      if (lat.Leq(x, y)) {
        values.push_back({{"x", lat.name(x)}, {"y", lat.name(y)}, {"mu", table(x, y)}});
      }
    }
  }
  return {{"bottom_top", table(lat.bottom(), lat.top())}, {"values", values}};
}

json ToJson(const Lattice& lattice, const SimplicialComplex& complex) {
  json facets = json::array();
  for (AtomSet f : complex.facets()) facets.push_back(AtomNames(lattice, f));
  return {{"facets", facets}, {"rank", complex.rank()}, {"pure", complex.pure()}};
}

json ToJson(const Lattice& lattice, const ShellingVerdict& v) {
  json order = json::array();
  for (std::size_t i : v.vertex_order) order.push_back(lattice.name(lattice.atoms()[i]));
  json facets = json::array();
  for (AtomSet f : v.facet_order) facets.push_back(AtomNames(lattice, f));
  json j{{"vertex_order", order}, {"facet_order", facets}, {"shelling", v.shelling}};
  if (v.failing_facet) {
    j["failing_facet"] = *v.failing_facet;
    j["witness_face"] = AtomNames(lattice, *v.witness_face);
  }
  return j;
}

}  // namespace geolattice
