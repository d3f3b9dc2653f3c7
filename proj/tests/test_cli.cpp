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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "sqcomm/isomorphism.hpp"
#include "sqcomm/report.hpp"
#include "sqcomm/verify.hpp"

using namespace sqcomm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream s(text);
  std::size_t n = 0;
  for (std::string line; std::getline(s, line);)
    if (contains(line, needle)) ++n;
  return n;
}

}  // namespace

TEST_CASE("check exit codes follow the verdict") {
  const Run d8 = run({"check", "dihedral:4"});
  CHECK(d8.code == 0);
  CHECK(contains(d8.out, "square commutative: yes"));
  CHECK(count_lines_with(d8.out, " holds") == 3);

  const Run d6 = run({"check", "dihedral:3"});
  CHECK(d6.code == 1);
  CHECK(contains(d6.out, "witness: ("));

  const Run sd16 = run({"check", std::string(kSD16Presentation)});
  CHECK(sd16.code == 1);
  CHECK(count_lines_with(sd16.out, " fails") == 1);
  CHECK(count_lines_with(sd16.out, "(ab)^2 = (ba)^2") == 1);
  CHECK(contains(sd16.out, "(ab)^2 = (ba)^2"));
}

TEST_CASE("check errors exit 2") {
  CHECK(run({"check", "dihedral:0"}).code == 2);
  CHECK(run({"check", "nonsense"}).code == 2);
  CHECK(run({"check", "< a, b | a c >"}).code == 2);
  const Run limit = run({"check", std::string(kInfinitePresentation), "--max-cosets", "200"});
  CHECK(limit.code == 2);
  CHECK(contains(limit.err, "error: "));
  CHECK(run({"check", "dihedral:4", "--gens", "a"}).code == 2);
  CHECK(run({"check", "dihedral:4", "--gens", "zz"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check --json emits a parseable report") {
  const Run r = run({"check", "q8", "--json"});
  CHECK(r.code == 0);
  const ReportDocument d = report_from_string(r.out);
  CHECK(d.subject == "q8");
  CHECK(d.order == 8);
  CHECK(d.is_square_commutative);
  CHECK(d.z2_size == 2);
  CHECK(d.hat_order == 4);
  CHECK(d.consistent);
  CHECK_FALSE(d.timings);

  const Run t = run({"check", "dihedral:3", "--json", "--timings"});
  CHECK(t.code == 1);
  const ReportDocument dt = report_from_string(t.out);
  REQUIRE(dt.timings);
  CHECK(dt.timings->size() == 2);
  CHECK(dt.witness);
}

TEST_CASE("check --gens selects generators") {
  const Run r = run({"check", "dihedral:4", "--gens", "ab,b", "--json"});
  CHECK(r.code == 0);
  const ReportDocument d = report_from_string(r.out);
  REQUIRE(d.criteria);
  CHECK(d.criteria->size() == 3);
  const Run three = run({"check", "elemabelian:2:3", "--gens", "x1 x2 x3", "--json"});
  CHECK(three.code == 0);
  CHECK(report_from_string(three.out).coverage_ok == std::optional<bool>(true));
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "heisenberg:3"},
        std::vector<std::string>{"check", "dihedral:6", "--json"},
        std::vector<std::string>{"catalog", "--under", "12"},
        std::vector<std::string>{"enumerate", std::string(kDic12Presentation)}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("enumerate") {
  const Run c7 = run({"enumerate", "< a | a^7 = 1 >"});
  CHECK(c7.code == 0);
  CHECK(c7.out == "order: 7\n");
  CHECK(run({"enumerate", std::string(kDic12Presentation)}).out == "order: 12\n");
  const Run bs = run({"enumerate", std::string(kInfinitePresentation), "--max-cosets", "1000"});
  CHECK(bs.code == 3);
  CHECK(run({"enumerate", "< a | a^2 = = 1 >"}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "sqcomm_test_dump.txt";
  const Run dumped = run({"enumerate", std::string(kSD16Presentation), "--dump", path.string()});
  CHECK(dumped.code == 0);
  std::ifstream f(path);
  const CayleyGroup g = read_cayley(f);
  CHECK(g.order() == 16);
  CHECK(are_isomorphic(g, metacyclic(8, 2, 3).group).has_value());
  std::filesystem::remove(path);
}

TEST_CASE("catalog listings") {
  const Run under = run({"catalog", "--under", "12"});
  CHECK(under.code == 0);
  CHECK(count_lines_with(under.out, "square-commutative") == 19);
  CHECK(count_lines_with(under.out, "not-square-commutative") == 2);
  CHECK(contains(under.out, "D6 "));
  CHECK(contains(under.out, "D10 "));

  const Run dih = run({"catalog", "dihedral", "--n", "1..8"});
  CHECK(dih.code == 0);
  std::vector<std::string> sq;
  std::istringstream s(dih.out);
  for (std::string line; std::getline(s, line);)
    if (contains(line, "  square-commutative")) sq.push_back(line.substr(0, line.find(' ')));
  CHECK(sq == std::vector<std::string>{"D2", "D4", "D8"});

  const Run q8 = run({"catalog", "q8"});
  CHECK(count_lines_with(q8.out, "square-commutative") == 1);
  CHECK(contains(q8.out, "  square-commutative"));

  CHECK(run({"catalog", "--under", "13"}).code == 2);
  CHECK(run({"catalog", "dihedral", "--n", "5..2"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
  CHECK(run({"catalog", "octonion:8"}).code == 2);
}
