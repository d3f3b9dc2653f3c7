// Copyright 2026 The sqcomm Authors
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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "sqcomm/catalog.hpp"
#include "sqcomm/report.hpp"
#include "sqcomm/sqcomm.hpp"
#include "sqcomm/verify.hpp"

using namespace sqcomm;

TEST_CASE("Cayley dumps round-trip") {
  for (const CatalogEntry& e : verification_corpus()) {
    INFO(e.name);
    const std::string text = cayley_to_string(e.group);
    const CayleyGroup back = cayley_from_string(text);
    CHECK(back.order() == e.group.order());
    CHECK(std::ranges::equal(back.table(), e.group.table()));
    CHECK(std::ranges::equal(back.labels(), e.group.labels()));
    CHECK(std::ranges::equal(back.generators(), e.group.generators()));
    CHECK(cayley_to_string(back) == text);
  }
}

TEST_CASE("Cayley dump layout") {
  const std::string c2 = cayley_to_string(cyclic(2).group);
  CHECK(c2 == "cayley v1 2\ne g\n0 1\n1 0\ngenerators: g\n");
  // Blank lines and CRLF endings are tolerated; the generators line is optional.
  const CayleyGroup g = cayley_from_string("cayley v1 2\r\n\r\ne g\r\n0 1\r\n1 0\r\n");
  CHECK(g.order() == 2);
  CHECK(g.generators().empty());
}

TEST_CASE("malformed Cayley dumps") {
  const char* bad[] = {
      "",
      "cayley v2 2\ne g\n0 1\n1 0\n",
      "cayley v1 0\n",
      "cayley v1 2\ne\n0 1\n1 0\n",
      "cayley v1 2\ne g\n0 1\n",
      "cayley v1 2\ne g\n0 1\n1 2\n",
      "cayley v1 2\ne g\n0 1\n1 x\n",
      "cayley v1 2\ne g\n0 1 1\n1 0\n",
      "cayley v1 2\ne g\n0 1\n1 0\ngenerators: h\n",
      "cayley v1 2\ne g\n0 1\n1 0\nextra\n",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK_THROWS_AS(cayley_from_string(text), FormatError);
  }
  // Well-formed but not a group.
  CHECK_THROWS_AS(cayley_from_string("cayley v1 2\ne g\n0 1\n1 1\n"), NotAGroup);
  try {
    cayley_from_string("cayley v1 2\ne g\n0 1\n1 x\n");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("report documents round-trip through JSON") {
  for (const CatalogEntry& e : verification_corpus()) {
    INFO(e.name);
    ReportDocument d = make_report(e.name, e.group, analyze(e.group, e.canonical_generators));
    CHECK(report_from_string(report_to_string(d)) == d);
    d.timings = {{{"build", 1.25}, {"analyze", 0.5}}};
    CHECK(report_from_string(report_to_string(d)) == d);
  }
}

TEST_CASE("report key order is stable") {
  const CatalogEntry d6 = dihedral(3);
  const ReportDocument d =
      make_report("dihedral:3", d6.group, analyze(d6.group, d6.canonical_generators));
  const auto j = to_json(d);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected{
      "schema_version", "subject",         "order",           "is_square_commutative",
      "witness",        "center_size",     "z2_size",         "hat_order",
      "hat_abelian",    "squares_central", "g_mod_z_abelian", "criteria",
      "coverage_ok",    "consistent"};
  CHECK(keys == expected);
  CHECK(j["schema_version"] == "1");
  CHECK_FALSE(j["is_square_commutative"].get<bool>());
  CHECK(j["witness"].size() == 2);
  CHECK(j["criteria"].size() == 3);
  CHECK(j["coverage_ok"].is_boolean());
  CHECK(j["consistent"].get<bool>());
}

TEST_CASE("malformed report documents") {
  CHECK_THROWS_AS(report_from_string("{"), FormatError);
  CHECK_THROWS_AS(report_from_string("{}"), FormatError);
  const CatalogEntry c3 = cyclic(3);
  auto j = to_json(make_report("cyclic:3", c3.group, analyze(c3.group, c3.canonical_generators)));
  j["schema_version"] = "2";
  CHECK_THROWS_AS(report_from_json(j), FormatError);
  j["schema_version"] = "1";
  j["order"] = "three";
  CHECK_THROWS_AS(report_from_json(j), FormatError);
}

TEST_CASE("absent fields serialize as null") {
  const CayleyGroup c4 = cyclic(4).group;
  const CayleyGroup bare = build_group(4, std::vector<std::uint32_t>(c4.table().begin(),
                                                                     c4.table().end()),
                                       std::vector<std::string>(c4.labels().begin(),
                                                                c4.labels().end()),
                                       {});
  const auto j = to_json(make_report("cyclic:4", bare, analyze(bare)));
  CHECK(j["witness"].is_null());
  CHECK(j["criteria"].is_null());
  CHECK(j["coverage_ok"].is_null());
  CHECK_FALSE(j.contains("timings"));
}
