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

#include <string>
#include <vector>

#include "oracle.hpp"
#include "sqcomm/catalog.hpp"
#include "sqcomm/group.hpp"
#include "sqcomm/isomorphism.hpp"

using namespace sqcomm;

namespace {

ElementId id(std::uint32_t v) { return ElementId{v}; }

ElementId at(const CayleyGroup& g, const std::string& label) {
  auto x = g.find(label);
  REQUIRE(x.has_value());
  return *x;
}

}  // namespace

TEST_CASE("trivial group from a 1x1 table") {
  const CayleyGroup g = build_group(1, {0}, {"e"}, {});
  CHECK(g.order() == 1);
  CHECK(g.identity() == id(0));
  CHECK(g.inv(id(0)) == id(0));
  CHECK(CayleyGroup().order() == 1);
}

TEST_CASE("S3 from permutations is a non-abelian group") {
  const oracle::Table t = oracle::s3();
  REQUIRE(t.n == 6);
  const CayleyGroup g = oracle::to_group(t);
  CHECK_FALSE(is_abelian(g));
  const PairVerdict v = is_abelian(g);
  REQUIRE(v.witness);
  CHECK(t.mul(v.witness->first.value, v.witness->second.value) !=
        t.mul(v.witness->second.value, v.witness->first.value));
  // Least witness: no earlier pair fails to commute.
  for (std::uint32_t x = 0; x < 6; ++x)
    for (std::uint32_t y = 0; y < 6; ++y) {
      if (std::pair{id(x), id(y)} >= *v.witness) break;
      CHECK(t.mul(x, y) == t.mul(y, x));
    }
}

TEST_CASE("subtraction mod 3 fails associativity at the least triple") {
  std::vector<std::uint32_t> table(9);
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y) table[x * 3 + y] = (x + 3 - y) % 3;
  try {
    build_group(3, table, {"0", "1", "2"}, {});
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(e.axiom() == "associativity");
    CHECK(e.witness() == std::vector<std::uint32_t>{0, 0, 1});
  }
}

TEST_CASE("build_group rejects malformed input") {
  CHECK_THROWS_AS(build_group(2, {0, 1, 1}, {"e", "a"}, {}), NotAGroup);
  CHECK_THROWS_AS(build_group(2, {0, 1, 1, 0}, {"e"}, {}), BadLabels);
  CHECK_THROWS_AS(build_group(2, {0, 1, 1, 0}, {"e", "e"}, {}), BadLabels);
  CHECK_THROWS_AS(build_group(2, {0, 1, 1, 0}, {"e", "a b"}, {}), BadLabels);
  CHECK_THROWS_AS(build_group(2, {0, 2, 1, 0}, {"e", "a"}, {}), NotAGroup);
  // Constant table: associative, no identity.
  try {
    build_group(2, {0, 0, 0, 0}, {"p", "q"}, {});
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(e.axiom() == "identity");
  }
  CHECK_THROWS_AS(build_group(2, {0, 1, 1, 0}, {"e", "a"}, {id(0)}), GeneratorsDoNotGenerate);
  CHECK_THROWS_AS(build_group(2, {0, 1, 1, 0}, {"e", "a"}, {id(5)}), GeneratorsDoNotGenerate);
}

TEST_CASE("nested-table form matches the flat form") {
  const CayleyGroup g = build_group({{0, 1}, {1, 0}}, {"e", "a"}, {id(1)});
  CHECK(g.order() == 2);
  CHECK(g.generators().size() == 1);
  CHECK_THROWS_AS(build_group({{0, 1}, {1}}, {"e", "a"}, {}), NotAGroup);
}

TEST_CASE("element arithmetic in C6 and D8") {
  const CayleyGroup c6 = cyclic(6).group;
  const ElementId g = at(c6, "g");
  CHECK(c6.element_order(c6.pow(g, 2)) == 3);
  CHECK(c6.pow(c6.identity(), -7) == c6.identity());
  CHECK(c6.pow(g, -1) == c6.inv(g));
  CHECK(c6.pow(g, 6) == c6.identity());
  CHECK(c6.pow(g, 0) == c6.identity());

  const CayleyGroup d8 = dihedral(4).group;
  const ElementId a = at(d8, "a"), b = at(d8, "b");
  CHECK(d8.element_order(a) == 4);
  CHECK(d8.element_order(d8.mul(a, b)) == 2);
  CHECK(d8.conj(a, b) == d8.inv(a));

  // Oracle: raw square symmetries have the same order histogram.
  CHECK(oracle::order_histogram(oracle::of(d8)) ==
        oracle::order_histogram(oracle::square_symmetries()));
}

TEST_CASE("center, subgroup closure, squares") {
  const CayleyGroup c6 = cyclic(6).group;
  CHECK(center(c6).size() == 6);

  const CayleyGroup d8 = dihedral(4).group;
  const ElementId a = at(d8, "a"), b = at(d8, "b"), a2 = at(d8, "a^2");
  CHECK(center(d8).members().size() == 2);
  CHECK(center(d8).contains(a2));
  CHECK(subgroup_generated(d8, {}).size() == 1);
  const ElementId seed_a2[] = {a2};
  CHECK(subgroup_generated(d8, seed_a2).size() == 2);
  const ElementId seed_ab[] = {a, b};
  CHECK(subgroup_generated(d8, seed_ab).size() == 8);
  CHECK(squares_set(d8) == ElementSet{d8.identity(), a2});

  const CayleyGroup q8 = quaternion8().group;
  CHECK(squares_set(q8) == ElementSet{at(q8, "1"), at(q8, "-1")});

  // Heisenberg mod 3 from matrices: brute-force center has 3 elements.
  const oracle::Table h3 = oracle::heisenberg(3);
  REQUIRE(h3.n == 27);
  CHECK(oracle::center(h3).size() == 3);
  CHECK(center(oracle::to_group(h3)).size() == 3);
  CHECK(center(heisenberg_mod(3).group).size() == 3);
}

TEST_CASE("SubgroupSet validates membership") {
  const CayleyGroup d8 = dihedral(4).group;
  CHECK_THROWS_AS(SubgroupSet(d8, {at(d8, "a")}), NotASubgroup);
  CHECK_NOTHROW(SubgroupSet(d8, {d8.identity(), at(d8, "a^2")}));
}

TEST_CASE("normality and quotients") {
  const CayleyGroup d8 = dihedral(4).group;
  const SubgroupSet z = center(d8);
  CHECK(is_normal(d8, z));
  const QuotientMap q = quotient_group(d8, z);
  CHECK(q.quotient.order() == 4);
  CHECK(is_abelian(q.quotient));
  CHECK(are_isomorphic(q.quotient, elementary_abelian(2, 2).group).has_value());
  CHECK(q.quotient.label(q(d8.identity())) == "e·N");

  const QuotientMap trivial = quotient_group(d8, trivial_subgroup(d8));
  CHECK(are_isomorphic(trivial.quotient, d8).has_value());

  const SubgroupSet reflection(d8, {d8.identity(), at(d8, "b")});
  CHECK_FALSE(is_normal(d8, reflection));
  CHECK_THROWS_AS(quotient_group(d8, reflection), NotNormal);

  // D12 / {e, a^3} against hand-built cosets: a^i and a^i b pair with
  // a^(i+3) and a^(i+3) b.
  const CayleyGroup d12 = dihedral(6).group;
  const SubgroupSet n(d12, {d12.identity(), at(d12, "a^3")});
  const QuotientMap q12 = quotient_group(d12, n);
  CHECK(q12.quotient.order() == 6);
  CHECK_FALSE(is_abelian(q12.quotient));
  CHECK(are_isomorphic(q12.quotient, oracle::to_group(oracle::s3())).has_value());
  const oracle::Table raw = oracle::of(d12);
  for (std::uint32_t x = 0; x < 12; ++x) {
    const std::uint32_t partner = raw.mul(x, at(d12, "a^3").value);
    CHECK(q12(id(x)) == q12(id(partner)));
  }
}

TEST_CASE("quotient invariants hold for every normal subgroup of D8 and Q8") {
  for (const CayleyGroup& g : {dihedral(4).group, quaternion8().group}) {
    // Enumerate subgroups generated by one or two elements.
    for (ElementId x : g.elements())
      for (ElementId y : g.elements()) {
        const ElementId seed[] = {x, y};
        const SubgroupSet n = subgroup_generated(g, seed);
        if (!is_normal(g, n)) continue;
        const QuotientMap q = quotient_group(g, n);
        CHECK(g.order() == n.size() * q.quotient.order());
        for (ElementId u : g.elements()) {
          CHECK((q(u) == q.quotient.identity()) == n.contains(u));
          for (ElementId v : g.elements()) CHECK(q(g.mul(u, v)) == q.quotient.mul(q(u), q(v)));
        }
      }
  }
}

TEST_CASE("direct products") {
  const CayleyGroup c1 = cyclic(1).group, c2 = cyclic(2).group;
  const CayleyGroup d8 = dihedral(4).group;
  CHECK(are_isomorphic(direct_product(c1, d8), d8).has_value());
  const CayleyGroup v4 = direct_product(c2, c2);
  CHECK(v4.order() == 4);
  for (ElementId x : v4.elements()) CHECK(v4.mul(x, x) == v4.identity());
  const CayleyGroup d8c2 = direct_product(d8, c2);
  CHECK(d8c2.order() == 16);
  CHECK(d8c2.generators().size() == 3);
  CHECK(d8c2.label(d8c2.generators()[2]) == "(e,g)");
  CHECK(oracle::sq_comm(oracle::of(d8c2)));
  CHECK(is_abelian(direct_product(c2, cyclic(3).group)));
  CHECK_FALSE(is_abelian(direct_product(c2, d8)));
}

TEST_CASE("isomorphism search") {
  const CayleyGroup d8 = dihedral(4).group, q8 = quaternion8().group;
  const auto self = are_isomorphic(d8, d8);
  REQUIRE(self);
  CHECK(self->verify());
  CHECK_FALSE(are_isomorphic(d8, q8));
  CHECK(order_profile(d8) != order_profile(q8));
  const auto h2 = are_isomorphic(heisenberg_mod(2).group, d8);
  REQUIRE(h2);
  CHECK(h2->verify());
  CHECK(are_isomorphic(oracle::to_group(oracle::square_symmetries()), d8).has_value());
  CHECK(are_isomorphic(oracle::to_group(oracle::quaternions()), q8).has_value());
  CHECK(are_isomorphic(oracle::to_group(oracle::heisenberg(3)), heisenberg_mod(3).group));
  CHECK_FALSE(are_isomorphic(cyclic(8).group, direct_product(cyclic(4).group, cyclic(2).group)));
  CHECK_THROWS_AS(are_isomorphic(cyclic(513).group, cyclic(513).group), OrderLimitExceeded);
}

TEST_CASE("Light's test validates orders above the full-scan limit") {
  const CayleyGroup big = elementary_abelian(2, 10).group;
  CHECK(big.order() == 1024);
  std::vector<std::uint32_t> t(big.table().begin(), big.table().end());
  std::vector<std::string> labels(big.labels().begin(), big.labels().end());
  // Swapping two entries of one row keeps closure, identity and inverses
  // intact, so only the associativity test can reject it.
  std::swap(t[5 * 1024 + 1], t[5 * 1024 + 2]);
  try {
    build_group(1024, t, labels, {});
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(e.axiom() == "associativity");
  }
  CHECK_NOTHROW(build_group(1024, std::vector<std::uint32_t>(big.table().begin(), big.table().end()),
                            labels, {}));
}
