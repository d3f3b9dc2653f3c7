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

#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sqcomm/catalog.hpp"
#include "sqcomm/isomorphism.hpp"
#include "sqcomm/sqcomm.hpp"
#include "sqcomm/verify.hpp"

using namespace sqcomm;

TEST_CASE("cyclic and elementary abelian") {
  const CatalogEntry c1 = cyclic(1);
  CHECK(c1.group.order() == 1);
  const CatalogEntry c6 = cyclic(6);
  CHECK(c6.group.order() == 6);
  CHECK(is_abelian(c6.group));
  CHECK(c6.group.label(c6.canonical_generators[0]) == "g");
  const CatalogEntry e8 = elementary_abelian(2, 3);
  CHECK(e8.group.order() == 8);
  for (ElementId x : e8.group.elements()) CHECK(e8.group.mul(x, x) == e8.group.identity());
  CHECK(e8.group.find("x1x3").has_value());
  CHECK(elementary_abelian(3, 2).group.find("x1^2x2").has_value());
  CHECK_THROWS_AS(cyclic(0), BadParameter);
  CHECK_THROWS_AS(elementary_abelian(4, 2), BadParameter);
  CHECK_THROWS_AS(elementary_abelian(2, 13), BadParameter);
  CHECK_NOTHROW(elementary_abelian(2, 12));
}

TEST_CASE("dihedral groups satisfy their defining relations") {
  for (long long n = 1; n <= 12; ++n) {
    const CatalogEntry d = dihedral(n);
    CHECK(d.group.order() == static_cast<std::size_t>(2 * n));
    const Presentation p = parse_presentation(dihedral_presentation(n));
    for (const Word& w : p.relators)
      CHECK(evaluate_word(d.group, d.canonical_generators, w) == d.group.identity());
  }
  CHECK_FALSE(is_square_commutative(dihedral(3).group));
  CHECK(is_square_commutative(dihedral(4).group));
  CHECK_FALSE(is_square_commutative(dihedral(5).group));
  CHECK_THROWS_AS(dihedral(0), BadParameter);
  // Labels match the symbols a^i and a^i b.
  const CayleyGroup d8 = dihedral(4).group;
  for (const char* l : {"e", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"})
    CHECK(d8.find(l).has_value());
}

TEST_CASE("quaternion group") {
  const CatalogEntry q = quaternion8();
  CHECK(q.group.order() == 8);
  CHECK(squares_set(q.group).size() == 2);
  CHECK(is_square_commutative(q.group));
  CHECK(are_isomorphic(q.group, oracle::to_group(oracle::quaternions())).has_value());
  const CayleyGroup& g = q.group;
  const ElementId i = *g.find("i"), j = *g.find("j"), k = *g.find("k");
  CHECK(g.mul(i, j) == k);
  CHECK(g.mul(j, i) == *g.find("-k"));
  CHECK(g.mul(i, i) == *g.find("-1"));
}

TEST_CASE("Heisenberg groups mod p") {
  const CatalogEntry h3 = heisenberg_mod(3);
  CHECK(h3.group.order() == 27);
  CHECK(center(h3.group).size() == 3);
  CHECK(g_mod_center_abelian(h3.group));
  CHECK_FALSE(is_square_commutative(h3.group));
  const CatalogEntry h2 = heisenberg_mod(2);
  CHECK(h2.group.order() == 8);
  CHECK(are_isomorphic(h2.group, dihedral(4).group).has_value());
  CHECK(is_square_commutative(h2.group));
  for (int p : {5, 7}) {
    const CatalogEntry h = heisenberg_mod(p);
    CHECK(are_isomorphic(h.group, oracle::to_group(oracle::heisenberg(p))).has_value());
    CHECK_FALSE(is_square_commutative(h.group));
  }
  CHECK_THROWS_AS(heisenberg_mod(4), BadParameter);
  CHECK_THROWS_AS(heisenberg_mod(11), BadParameter);
}

TEST_CASE("metacyclic family") {
  const CatalogEntry m = metacyclic(7, 1, 1);
  CHECK(are_isomorphic(m.group, cyclic(7).group).has_value());
  const CatalogEntry d8 = metacyclic(4, 2, 3);
  CHECK(d8.group.order() == 8);
  CHECK(are_isomorphic(d8.group, dihedral(4).group).has_value());
  CHECK(is_square_commutative(d8.group));
  const CatalogEntry m16 = metacyclic(8, 2, 3);
  CHECK(m16.group.order() == 16);
  CHECK_FALSE(oracle::sq_comm(oracle::of(m16.group)));
  CHECK(m16.warnings.empty());

  // Incoherent parameters collapse: a^(j^2) = a forces a^3 = e when n = 5,
  // j = 2, m = 2 (2^2 = 4, so a = a^4, a^3 = e, and a^5 = e gives a = e).
  const CatalogEntry bad = metacyclic(5, 2, 2);
  CHECK(bad.group.order() == 2);
  REQUIRE(bad.warnings.size() == 1);
  CHECK(bad.warnings[0].find("collapses") != std::string::npos);
}

TEST_CASE("small groups of order below 12") {
  const auto groups = small_groups_under_12();
  CHECK(groups.size() == 19);
  std::set<std::string> names;
  std::vector<std::string> failing;
  std::size_t order8 = 0;
  for (const auto& e : groups) {
    names.insert(e.name);
    CHECK(generates(e.group, e.canonical_generators));
    const bool sq = oracle::sq_comm(oracle::of(e.group));
    CHECK(static_cast<bool>(is_square_commutative(e.group)) == sq);
    if (!sq) failing.push_back(e.name);
    if (e.group.order() == 8) {
      ++order8;
      CHECK(sq);
    }
  }
  CHECK(names.size() == groups.size());
  CHECK(failing == std::vector<std::string>{"D6", "D10"});
  CHECK(order8 == 5);
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      CHECK_FALSE(are_isomorphic(groups[i].group, groups[j].group));
}

TEST_CASE("relation-defined quotients") {
  const CatalogEntry c55 = bs_relation_quotient(1, 1, "a^5=1, b^5=1");
  CHECK(c55.group.order() == 25);
  CHECK(is_abelian(c55.group));
  const CatalogEntry g12 = bs_relation_quotient(2, 2, "a^4=b^3=1, b a = a b^2");
  CHECK(g12.group.order() == 12);
  CHECK(are_isomorphic(g12.group, todd_coxeter(kDic12Presentation).group).has_value());
  const CatalogEntry g8 = bs_relation_quotient(1, 3, "a^4=1, b^2=1");
  CHECK(is_square_commutative(g8.group));
  CHECK_THROWS_AS(bs_relation_quotient(2, 3, "", 1000), CosetLimitExceeded);
  CHECK_THROWS_AS(bs_relation_quotient(1, 1, "a^5=", 1000), SyntaxError);
  CHECK_THROWS_AS(bs_relation_quotient(0, 1, "", 1000), BadParameter);
}

TEST_CASE("catalog spec strings") {
  CHECK(from_spec("cyclic:5").group.order() == 5);
  CHECK(from_spec("dihedral:4").name == "D8");
  CHECK(from_spec("elemabelian:2:3").group.order() == 8);
  CHECK(from_spec("q8").name == "Q8");
  CHECK(from_spec("heisenberg:3").group.order() == 27);
  CHECK(from_spec("metacyclic:4:2:3").group.order() == 8);
  CHECK(from_spec("bs:1:1", "a^3=1, b^3=1").group.order() == 9);
  CHECK_THROWS_AS(from_spec("dihedral"), BadParameter);
  CHECK_THROWS_AS(from_spec("dihedral:x"), BadParameter);
  CHECK_THROWS_AS(from_spec("octonion:8"), BadParameter);
  CHECK_THROWS_AS(from_spec("q8", "a=1"), BadParameter);
}

TEST_CASE("verification corpus shape") {
  const auto corpus = verification_corpus();
  CHECK(corpus.size() >= 40);
  std::size_t three = 0;
  std::set<std::string> names;
  for (const auto& e : corpus) {
    CHECK(e.group.order() <= 64);
    names.insert(e.name);
    if (e.canonical_generators.size() >= 3) ++three;
  }
  CHECK(names.size() == corpus.size());
  CHECK(three >= 10);
}
