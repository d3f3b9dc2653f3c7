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

// Verification corpus and the exhaustive suites run by `sqcomm verify-paper`.
//
// Every suite is a pure function of the corpus and reports the first failure
// it meets. Suites run in a fixed order so the scoreboard is reproducible.

#ifndef SQCOMM_VERIFY_HPP_
#define SQCOMM_VERIFY_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqcomm/catalog.hpp"
#include "sqcomm/group.hpp"
#include "sqcomm/isomorphism.hpp"
#include "sqcomm/presentation.hpp"
#include "sqcomm/sqcomm.hpp"
#include "sqcomm/todd_coxeter.hpp"

namespace sqcomm {

// The two presentations whose groups satisfy exactly two of the three
// two-generator relations.
inline constexpr std::string_view kDic12Presentation =
    "< a, b | a^4 = b^3 = 1, b a = a b^2, b a^2 = a^2 b >";
inline constexpr std::string_view kSD16Presentation =
    "< a, b | a^4 = b^2 = 1, b a = (a b)^3, b a^2 = a^2 b >";
// Relation that is infinite (its coset enumeration must hit the limit).
inline constexpr std::string_view kInfinitePresentation = "< a, b | a^2 b = b a^3 >";

inline std::string dihedral_presentation(long long n) {
  return "< a, b | a^" + std::to_string(n) + " = b^2 = 1, a b a = b >";
}

inline CatalogEntry presented(std::string name, std::string_view text) {
  Realization r = todd_coxeter(text);
  return CatalogEntry{std::move(name), r.group, r.assignment, {}, {}};
}

// Largest order used by the metacyclic grid.
inline constexpr long long kGridMaxN = 12;
inline constexpr long long kGridMaxM = 4;

inline bool metacyclic_coherent(long long n, long long m, long long j) {
  return detail::pow_mod(j, m, n) == 1 % n;
}

// Fixed corpus, in definition order, with unique names.
inline std::vector<CatalogEntry> verification_corpus() {
  std::vector<CatalogEntry> c = small_groups_under_12();
  c.push_back(dihedral(1));
  c.push_back(dihedral(2));
  for (long long n = 6; n <= 8; ++n) c.push_back(dihedral(n));
  c.push_back(heisenberg_mod(2));
  c.push_back(heisenberg_mod(3));
  for (long long n = 2; n <= kGridMaxN; ++n)
    for (long long m = 2; m <= kGridMaxM; ++m)
      for (long long j = 2; j < n; ++j)
        if (metacyclic_coherent(n, m, j)) c.push_back(metacyclic(n, m, j));
  c.push_back(presented("Dic12", kDic12Presentation));
  c.push_back(presented("SD16", kSD16Presentation));
  c.push_back(bs_relation_quotient(1, 1, "a^5=1, b^5=1"));
  c.push_back(bs_relation_quotient(1, 3, "a^4=1, b^2=1"));

  const CatalogEntry c2 = cyclic(2), c4 = cyclic(4), d8 = dihedral(4), q8 = quaternion8(),
                     s3 = dihedral(3);
  c.push_back(product(d8, c2));
  c.push_back(product(s3, c2));
  c.push_back(product(q8, c2));
  c.push_back(product(d8, elementary_abelian(2, 2)));
  c.push_back(product(d8, c4));
  c.push_back(product(q8, c4));
  c.push_back(product(d8, d8));
  c.push_back(product(d8, q8));
  c.push_back(product(q8, q8));
  c.push_back(product(s3, s3));
  c.push_back(product(dihedral(5), c2));
  c.push_back(product(heisenberg_mod(3), c2));
  c.push_back(product(c4, c4));
  c.push_back(elementary_abelian(2, 4));
  c.push_back(elementary_abelian(2, 5));
  c.push_back(elementary_abelian(2, 6));
  c.push_back(elementary_abelian(3, 3));
  return c;
}

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string failure;  // first failing case, empty when passed
};

namespace detail {

inline std::string show(const CatalogEntry& e, std::initializer_list<ElementId> xs) {
  std::string s = e.name + " (";
  bool first = true;
  for (ElementId x : xs) {
    s += (first ? "" : ", ") + e.group.label(x);
    first = false;
  }
  return s + ")";
}

inline std::vector<ElementId> distinct_generators(const CatalogEntry& e) {
  std::vector<ElementId> out;
  for (ElementId x : e.canonical_generators)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

// Runs `check` on every entry it applies to; `check` returns a failure
// message or nullopt, and `applies` filters the corpus.
template <typename Applies, typename Check>
SuiteResult for_each_entry(std::string name, const std::vector<CatalogEntry>& corpus,
                           Applies applies, Check check) {
  SuiteResult r{std::move(name), true, 0, {}};
  for (const CatalogEntry& e : corpus) {
    if (!applies(e)) continue;
    ++r.cases;
    if (auto msg = check(e)) {
      r.passed = false;
      r.failure = *msg;
      return r;
    }
  }
  return r;
}

inline bool always(const CatalogEntry&) { return true; }

inline bool two_generated(const CatalogEntry& e) { return e.canonical_generators.size() == 2; }

inline bool sq(const CatalogEntry& e) { return static_cast<bool>(is_square_commutative(e.group)); }

}  // namespace detail

inline SuiteResult suite_catalog_valid(const std::vector<CatalogEntry>& corpus) {
  std::vector<std::string> seen;
  return detail::for_each_entry(
      "corpus entries generate and have unique names", corpus, detail::always,
      [&](const CatalogEntry& e) -> std::optional<std::string> {
        if (std::find(seen.begin(), seen.end(), e.name) != seen.end())
          return "duplicate name " + e.name;
        seen.push_back(e.name);
        if (!generates(e.group, e.canonical_generators))
          return e.name + ": canonical generators do not generate";
        if (e.group.order() > 64) return e.name + ": order above 64";
        return std::nullopt;
      });
}

inline SuiteResult suite_small_census() {
  SuiteResult r{"groups of order < 12: only D6 and D10 fail", true, 0, {}};
  const auto groups = small_groups_under_12();
  r.cases = groups.size();
  if (groups.size() != 19) {
    r.passed = false;
    r.failure = "expected 19 classes, got " + std::to_string(groups.size());
    return r;
  }
  std::vector<std::string> failing;
  for (const auto& e : groups)
    if (!is_square_commutative(e.group)) failing.push_back(e.name);
  if (failing != std::vector<std::string>{"D6", "D10"}) {
    r.passed = false;
    r.failure = "non-square-commutative set differs:";
    for (const auto& n : failing) r.failure += " " + n;
    return r;
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (are_isomorphic(groups[i].group, groups[j].group)) {
        r.passed = false;
        r.failure = groups[i].name + " is isomorphic to " + groups[j].name;
        return r;
      }
  return r;
}

inline SuiteResult suite_hat_abelian(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "sq-comm <=> G/Z2 abelian; xy ~ yx when sq-comm", corpus, detail::always,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        const bool s = detail::sq(e);
        if (s != static_cast<bool>(is_abelian(hat_group(e.group).quotient)))
          return e.name + ": verdict differs from hat(G) abelian";
        if (s)
          if (auto w = sim_failure(e.group))
            return detail::show(e, {w->first, w->second}) + ": xy not ~ yx";
        return std::nullopt;
      });
}

inline SuiteResult suite_squares_central(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "sq-comm <=> every square is central", corpus, detail::always,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        if (detail::sq(e) != static_cast<bool>(squares_central(e.group)))
          return e.name + ": verdict differs from squares central";
        return std::nullopt;
      });
}

inline SuiteResult suite_two_generator(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "two-generator relations <=> sq-comm", corpus, detail::two_generated,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        const auto& gens = e.canonical_generators;
        const CriterionReport c = two_generator_criterion(e.group, gens[0], gens[1]);
        if (c.overall != detail::sq(e)) return e.name + ": criterion disagrees with brute force";
        return std::nullopt;
      });
}

inline SuiteResult suite_two_generator_counterexamples() {
  SuiteResult r{"order-12 and order-16 groups each fail exactly one relation", true, 0, {}};
  const std::pair<std::string_view, std::string_view> cases[] = {
      {kDic12Presentation, kRelB2A}, {kSD16Presentation, kRelABSquared}};
  for (const auto& [text, expected_failure] : cases) {
    ++r.cases;
    const Realization g = todd_coxeter(text);
    const CriterionReport c = two_generator_criterion(g.group, g.assignment[0], g.assignment[1]);
    for (const RelationCheck& rel : c.relations)
      if (rel.holds == (rel.name == expected_failure)) {
        r.passed = false;
        r.failure = std::string(text) + ": relation " + rel.name +
                    (rel.holds ? " unexpectedly holds" : " unexpectedly fails");
        return r;
      }
  }
  return r;
}

inline SuiteResult suite_n_generator(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "n-generator relations <=> sq-comm", corpus,
      [](const CatalogEntry& e) { return detail::distinct_generators(e).size() >= 3; },
      [](const CatalogEntry& e) -> std::optional<std::string> {
        const CriterionReport c = n_generator_criterion(e.group, detail::distinct_generators(e));
        if (c.overall != detail::sq(e)) return e.name + ": criterion disagrees with brute force";
        return std::nullopt;
      });
}

inline SuiteResult suite_center_quotient(const std::vector<CatalogEntry>& corpus) {
  SuiteResult r{"sq-comm => G/Z abelian; converse fails on Heis3", true, 0, {}};
  for (const CatalogEntry& e : corpus) {
    ++r.cases;
    if (detail::sq(e) && !g_mod_center_abelian(e.group)) {
      r.passed = false;
      r.failure = e.name + ": sq-comm but G/Z non-abelian";
      return r;
    }
  }
  ++r.cases;
  const CayleyGroup h3 = heisenberg_mod(3).group;
  if (!g_mod_center_abelian(h3) || is_square_commutative(h3)) {
    r.passed = false;
    r.failure = "Heis3 does not separate G/Z abelian from sq-comm";
  }
  return r;
}

inline SuiteResult suite_coverage(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "sq-comm => G = C_n Z(G) and two-generator normal form", corpus, detail::sq,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        const auto gens = detail::distinct_generators(e);
        if (!coverage_check(e.group, gens)) return e.name + ": C_n Z(G) misses elements";
        if (gens.size() != 2) return std::nullopt;
        for (ElementId x : e.group.elements()) {
          try {
            const NormalForm2 nf = normal_form_two_gen(e.group, gens[0], gens[1], x);
            if (evaluate_normal_form(e.group, gens[0], gens[1], nf) != x)
              return detail::show(e, {x}) + ": normal form re-evaluates wrongly";
          } catch (const NoDecomposition&) {
            return detail::show(e, {x}) + ": no normal form";
          }
        }
        return std::nullopt;
      });
}

// Exponent window for the sandwich identity.
inline constexpr IntRange kSandwichRange{-3, 3};
inline constexpr std::size_t kReorderMaxLen = 4;

inline SuiteResult suite_identities(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "sandwich, fourth-power and reorder identities", corpus, detail::sq,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        if (auto w = sandwich_check(e.group, kSandwichRange, kSandwichRange))
          return detail::show(e, {w->x, w->y}) + ": (xyx)^" + std::to_string(w->m) +
                 " and y^" + std::to_string(w->n) + " do not commute";
        if (auto w = fourth_power_check(e.group))
          return detail::show(e, {w->first, w->second}) + ": (xy)^4 != x^4 y^4";
        if (auto w = reorder_defect_check(e.group, detail::distinct_generators(e), kReorderMaxLen))
          return detail::show(e, {w->defect}) + ": reorder defect outside Z2";
        return std::nullopt;
      });
}

inline SuiteResult suite_even_powers(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "even powers of a, b, ab central under the three relations", corpus,
      [](const CatalogEntry& e) {
        return detail::two_generated(e) &&
               two_generator_criterion(e.group, e.canonical_generators[0],
                                       e.canonical_generators[1])
                   .overall;
      },
      [](const CatalogEntry& e) -> std::optional<std::string> {
        const auto& gens = e.canonical_generators;
        if (auto w = even_powers_central(e.group, gens[0], gens[1]))
          return detail::show(e, {w->first}) + ": power " + std::to_string(w->second) +
                 " not central";
        return std::nullopt;
      });
}

inline constexpr long long kPowerRelationMaxExp = 6;

inline SuiteResult suite_power_relation(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "x^p y = y x^q forces x^(p-q) or x^(2(p-q)) = e", corpus, detail::sq,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        if (auto w = power_relation_check(e.group, kPowerRelationMaxExp))
          return detail::show(e, {w->x, w->y}) + " with p=" + std::to_string(w->p) +
                 ", q=" + std::to_string(w->q);
        return std::nullopt;
      });
}

inline SuiteResult suite_conditionals(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "conditional biconditionals on generating pairs", corpus, detail::two_generated,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        const auto& gens = e.canonical_generators;
        const ConditionalReport rep = conditional_equivalence_checks(e.group, gens[0], gens[1]);
        for (const Biconditional& b : rep.clauses)
          if (!b.holds()) return e.name + ": " + b.name;
        return std::nullopt;
      });
}

inline SuiteResult suite_z2(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "Z2 is normal and squares to e", corpus, detail::always,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        const SubgroupSet z2 = z2_subgroup(e.group);
        if (!is_normal(e.group, z2)) return e.name + ": Z2 not normal";
        for (ElementId d : z2.members())
          if (square(e.group, d) != e.group.identity())
            return detail::show(e, {d}) + ": Z2 member with d^2 != e";
        return std::nullopt;
      });
}

inline constexpr std::size_t kInfiniteCosetLimit = 1000;

inline SuiteResult suite_enumeration() {
  SuiteResult r{"coset enumeration goldens", true, 0, {}};
  const auto fail = [&](std::string msg) {
    r.passed = false;
    r.failure = std::move(msg);
    return r;
  };
  const std::pair<std::string, std::size_t> goldens[] = {
      {std::string(kDic12Presentation), 12}, {std::string(kSD16Presentation), 16}};
  for (const auto& [text, order] : goldens) {
    ++r.cases;
    const std::size_t got = todd_coxeter(text).group.order();
    if (got != order) return fail(text + ": order " + std::to_string(got));
  }
  for (long long n = 1; n <= 10; ++n) {
    ++r.cases;
    const std::size_t got = todd_coxeter(dihedral_presentation(n)).group.order();
    if (got != static_cast<std::size_t>(2 * n))
      return fail(dihedral_presentation(n) + ": order " + std::to_string(got));
  }
  ++r.cases;
  try {
    todd_coxeter(kInfinitePresentation, kInfiniteCosetLimit);
    return fail(std::string(kInfinitePresentation) + ": enumeration terminated");
  } catch (const CosetLimitExceeded&) {
  }
  return r;
}

inline SuiteResult suite_dihedral() {
  SuiteResult r{"dihedral D2n, n <= 8: sq-comm exactly for n in {1,2,4}", true, 0, {}};
  for (long long n = 1; n <= 8; ++n) {
    ++r.cases;
    const CatalogEntry e = dihedral(n);
    const Presentation p = parse_presentation(dihedral_presentation(n));
    for (const Word& w : p.relators)
      if (evaluate_word(e.group, e.canonical_generators, w) != e.group.identity()) {
        r.passed = false;
        r.failure = e.name + ": relator " + format_word(w, p.generators) + " fails";
        return r;
      }
    const bool expected = n == 1 || n == 2 || n == 4;
    if (e.group.order() != static_cast<std::size_t>(2 * n) || detail::sq(e) != expected) {
      r.passed = false;
      r.failure = e.name + ": unexpected order or verdict";
      return r;
    }
  }
  return r;
}

inline SuiteResult suite_heisenberg() {
  SuiteResult r{"Heis3: G/Z abelian, not sq-comm; Heis2 = D8", true, 2, {}};
  const CayleyGroup h3 = heisenberg_mod(3).group, h2 = heisenberg_mod(2).group;
  if (h3.order() != 27 || center(h3).size() != 3 || !g_mod_center_abelian(h3) ||
      is_square_commutative(h3)) {
    r.passed = false;
    r.failure = "Heis3 has the wrong shape";
  } else if (!are_isomorphic(h2, dihedral(4).group) || !is_square_commutative(h2)) {
    r.passed = false;
    r.failure = "Heis2 is not a square commutative copy of D8";
  }
  return r;
}

// sq-comm <=> (j odd and n = 2(j-1)) or j = 1 (mod n), on every coherent
// (n, m, j) of the grid; also order mn and ab = ba^j.
inline SuiteResult suite_metacyclic() {
  SuiteResult r{"metacyclic M(n,m,j): sq-comm <=> j odd and n = 2(j-1)", true, 0, {}};
  for (long long n = 1; n <= kGridMaxN; ++n)
    for (long long m = 1; m <= kGridMaxM; ++m)
      for (long long j = 1; j <= std::max(1LL, n - 1); ++j) {
        if (!metacyclic_coherent(n, m, j)) continue;
        ++r.cases;
        const CatalogEntry e = metacyclic(n, m, j);
        const CayleyGroup& g = e.group;
        const ElementId a = e.canonical_generators.front();
        const ElementId b = e.canonical_generators.back();
        const bool relation = g.mul(a, b) == g.mul(b, g.pow(a, j));
        const bool expected = (j % 2 == 1 && n == 2 * (j - 1)) || j % n == 1 % n;
        if (g.order() != static_cast<std::size_t>(n * m) || !relation ||
            detail::sq(e) != expected) {
          r.passed = false;
          r.failure = e.name + ": order, relation or verdict mismatch";
          return r;
        }
      }
  return r;
}

inline SuiteResult suite_analyze(const std::vector<CatalogEntry>& corpus) {
  return detail::for_each_entry(
      "analysis report is self-consistent", corpus, detail::always,
      [](const CatalogEntry& e) -> std::optional<std::string> {
        if (!analyze(e.group, detail::distinct_generators(e)).consistent)
          return e.name + ": inconsistent report";
        return std::nullopt;
      });
}

// Every suite, in scoreboard order.
inline std::vector<SuiteResult> run_all_suites(const std::vector<CatalogEntry>& corpus) {
  std::vector<std::function<SuiteResult()>> suites = {
      [&] { return suite_catalog_valid(corpus); },
      [] { return suite_small_census(); },
      [&] { return suite_hat_abelian(corpus); },
      [&] { return suite_squares_central(corpus); },
      [&] { return suite_two_generator(corpus); },
      [] { return suite_two_generator_counterexamples(); },
      [&] { return suite_n_generator(corpus); },
      [&] { return suite_center_quotient(corpus); },
      [&] { return suite_coverage(corpus); },
      [&] { return suite_identities(corpus); },
      [&] { return suite_even_powers(corpus); },
      [&] { return suite_power_relation(corpus); },
      [&] { return suite_conditionals(corpus); },
      [&] { return suite_z2(corpus); },
      [] { return suite_enumeration(); },
      [] { return suite_dihedral(); },
      [] { return suite_heisenberg(); },
      [] { return suite_metacyclic(); },
      [&] { return suite_analyze(corpus); },
  };
  std::vector<SuiteResult> out;
  out.reserve(suites.size());
  for (const auto& s : suites) {
    try {
      out.push_back(s());
    } catch (const Error& e) {
      out.push_back(SuiteResult{"(suite raised)", false, 0, e.what()});
    }
  }
  return out;
}

}  // namespace sqcomm

#endif  // SQCOMM_VERIFY_HPP_
