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

#include <gtest/gtest.h>

#include <filesystem>
#include <variant>

#include "geolattice/catalog.hpp"
#include "geolattice/enumerate.hpp"
#include "geolattice/geometric.hpp"
#include "geolattice/io.hpp"
#include "oracles.hpp"

namespace geolattice {
namespace {

using oracle::KindOf;

std::string Data(const std::string& file) {
  return std::string(GEOLATTICE_TEST_DATA) + "/" + file;
}

std::string Temp(const std::string& file) {
  return (std::filesystem::temp_directory_path() / ("geolattice_" + file)).string();
}

void ExpectSameLattice(const Lattice& a, const Lattice& b) {
  EXPECT_EQ(a.poset().names(), b.poset().names());
  EXPECT_EQ(a.poset().cover_pairs(), b.poset().cover_pairs());
}

TEST(Catalog, ParseFamily) {
  EXPECT_EQ(ParseFamily("boolean"), Family::kBoolean);
  EXPECT_EQ(ParseFamily("braid-arrangement"), Family::kBraidArrangement);
  EXPECT_EQ(KindOf([] { ParseFamily("cube"); }), ErrorKind::kUnknownFamily);
}

TEST(Catalog, Boolean2IsDiamond) {
  const Lattice b2 = BooleanLattice(2);
  EXPECT_EQ(b2.poset().names(), (std::vector<std::string>{"0", "1", "2", "12"}));
  EXPECT_EQ(b2.atom_count(), 2u);
}

TEST(Catalog, Partition3) {
  const Lattice p3 = PartitionLattice(3);
  EXPECT_EQ(p3.size(), 5u);
  EXPECT_EQ(p3.name(p3.bottom()), "1|2|3");
  EXPECT_EQ(p3.name(p3.top()), "123");
  EXPECT_EQ(p3.atom_count(), 3u);
}

TEST(Catalog, BellNumbers) {
  const std::vector<std::size_t> bell{1, 2, 5, 15, 52};
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(PartitionLattice(n).size(), bell[n - 1]);
}

TEST(Catalog, NamedFamiliesAreGeometric) {
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_TRUE(IsGeometric(BooleanLattice(n)).geometric);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(IsGeometric(PartitionLattice(n)).geometric);
}

TEST(Catalog, W6Fixture) {
  const Lattice w6 = std::get<Lattice>(Generate(Family::kW6, 0));
  EXPECT_EQ(w6.poset().names(), (std::vector<std::string>{"0", "a", "b", "c", "d", "1"}));
  EXPECT_EQ(w6.poset().cover_pairs().size(), 7u);
}

TEST(Catalog, RangeErrors) {
  EXPECT_EQ(KindOf([] { Generate(Family::kBoolean, 7); }), ErrorKind::kBudgetExceeded);
  EXPECT_EQ(KindOf([] { Generate(Family::kPartition, 0); }), ErrorKind::kBudgetExceeded);
}

TEST(Io, LatticeRoundTrip) {
  for (const Lattice& lat : {BooleanLattice(2), W6Lattice(), PartitionLattice(4)}) {
    const std::string path = Temp("roundtrip.json");
    SaveLattice(path, lat);
    ExpectSameLattice(LoadLattice(path), lat);
  }
  for (const Lattice& lat : EnumerateLattices(6)) {
    ExpectSameLattice(ParseLatticeJson(LatticeToJson(lat.poset()).dump()), lat);
  }
}

TEST(Io, ArrangementRoundTrip) {
  const CentralArrangement arr = BraidArrangement(4);
  const std::string path = Temp("arr.json");
  SaveArrangement(path, arr);
  const CentralArrangement back = LoadArrangement(path);
  EXPECT_EQ(back.dim(), arr.dim());
  EXPECT_EQ(back.normals(), arr.normals());
}

TEST(Io, FixturesLoad) {
  ExpectSameLattice(LoadLattice(Data("w6.json")), W6Lattice());
  EXPECT_EQ(LoadArrangement(Data("braid3.json")).size(), 3u);
}

TEST(Io, MalformedJsonIsParseError) {
  try {
    LoadLattice(Data("malformed.json"));
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParseError);
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}

TEST(Io, UnknownElementIsValidationError) {
  try {
    LoadLattice(Data("unknown_element.json"));
    FAIL() << "expected ValidationError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidationError);
    EXPECT_NE(std::string(e.what()).find("UnknownElement"), std::string::npos);
  }
}

TEST(Io, StructuralErrors) {
  EXPECT_EQ(KindOf([] { ParseLatticeJson(R"({"elements": ["0"], "covers": [], "x": 1})"); }),
            ErrorKind::kValidationError);
  EXPECT_EQ(KindOf([] { ParseLatticeJson(R"({"elements": ["0"]})"); }),
            ErrorKind::kValidationError);
  EXPECT_EQ(KindOf([] { ParseLatticeJson(R"([1, 2])"); }), ErrorKind::kValidationError);
  EXPECT_EQ(KindOf([] { LoadLattice(Data("no_top.json")); }), ErrorKind::kValidationError);
  EXPECT_EQ(KindOf([] { LoadArrangement(Data("parallel.json")); }),
            ErrorKind::kValidationError);
  EXPECT_EQ(KindOf([] { LoadLattice(Data("missing.json")); }), ErrorKind::kParseError);
}

}  // namespace
}  // namespace geolattice
