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

#include "geolattice/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "geolattice/error.hpp"

namespace geolattice {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::kParseError,
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + e.what());
  }
}

void RequireKeys(const json& j, const std::set<std::string>& keys) {
  if (!j.is_object()) {
    throw Error(ErrorKind::kValidationError, "top level must be an object");
  }
  for (const auto& [key, _] : j.items()) {
    if (!keys.count(key)) {
      throw Error(ErrorKind::kValidationError, "unknown key '" + key + "'");
    }
  }
  for (const auto& key : keys) {
    if (!j.contains(key)) {
      throw Error(ErrorKind::kValidationError, "missing key '" + key + "'");
    }
  }
}

template <typename Fn>
auto Validating(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kValidationError) throw;
    throw Error(ErrorKind::kValidationError, e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kValidationError, e.what());
  }
}

}  // namespace

Poset ParsePosetJson(std::string_view text) {
  const json j = ParseJson(text);
  return Validating([&] {
    RequireKeys(j, {"elements", "covers"});
    const auto names = j.at("elements").get<std::vector<std::string>>();
    std::vector<CoverPair> covers;
    for (const json& pair : j.at("covers")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::kValidationError,
                    "each cover must be a [lower, upper] pair");
      }
      Element ends[2];
      for (int k = 0; k < 2; ++k) {
        const auto name = pair[k].get<std::string>();
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
          throw Error(ErrorKind::kUnknownElement,
                      "cover references unknown element '" + name + "'");
        }
        ends[k] = static_cast<Element>(it - names.begin());
      }
      covers.emplace_back(ends[0], ends[1]);
    }
    return Poset::Build(names, covers);
  });
}

Lattice ParseLatticeJson(std::string_view text) {
  Poset p = ParsePosetJson(text);
  return Validating([&] { return Lattice::FromPoset(std::move(p)); });
}

json LatticeToJson(const Poset& poset) {
  json covers = json::array();
  for (const auto& [u, v] : poset.cover_pairs()) {
    covers.push_back({poset.name(u), poset.name(v)});
  }
  return {{"elements", poset.names()}, {"covers", covers}};
}

CentralArrangement ParseArrangementJson(std::string_view text) {
  const json j = ParseJson(text);
  return Validating([&] {
    RequireKeys(j, {"dim", "hyperplanes"});
    const auto dim = j.at("dim").get<std::int64_t>();
    if (dim <= 0) {
      throw Error(ErrorKind::kInvalidArrangement, "dim must be positive");
    }
    for (const json& h : j.at("hyperplanes")) {
      for (const json& c : h) {
        if (!c.is_number_integer()) {
          throw Error(ErrorKind::kValidationError,
                      "hyperplane normals must be integers");
        }
      }
    }
    return CentralArrangement(static_cast<std::size_t>(dim),
                              j.at("hyperplanes").get<std::vector<IntVector>>());
  });
}

json ArrangementToJson(const CentralArrangement& arr) {
  return {{"dim", arr.dim()}, {"hyperplanes", arr.normals()}};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kValidationError,
                "cannot write '" + path + "'");
  }
  out << contents;
}

Lattice LoadLattice(const std::string& path) {
  return ParseLatticeJson(ReadFile(path));
}

void SaveLattice(const std::string& path, const Lattice& lattice) {
  WriteFile(path, LatticeToJson(lattice.poset()).dump(2) + "\n");
}

CentralArrangement LoadArrangement(const std::string& path) {
  return ParseArrangementJson(ReadFile(path));
}

void SaveArrangement(const std::string& path, const CentralArrangement& arr) {
  WriteFile(path, ArrangementToJson(arr).dump(2) + "\n");
}

}  // namespace geolattice
