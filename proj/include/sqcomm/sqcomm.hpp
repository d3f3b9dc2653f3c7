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

// Square commutativity: groups in which (xy)^2 = (yx)^2 for every x, y.
//
// Everything here is an exhaustive check on a finite Cayley table. Checks
// that quantify over elements scan in lexicographic order, so the witness a
// check reports is always the least failing tuple.
//
// Notation used in names and docs:
//   Z(G)    center
//   Z2(G)   central elements whose square is the identity
//   hat(G)  G / Z2(G)
//   C_n     identity plus the products of generators taken along strictly
//           increasing index subsequences

#ifndef SQCOMM_SQCOMM_HPP_
#define SQCOMM_SQCOMM_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sqcomm/error.hpp"
#include "sqcomm/group.hpp"

namespace sqcomm {

inline ElementId square(const CayleyGroup& g, ElementId x) { return g.mul(x, x); }

inline bool squares_commute(const CayleyGroup& g, ElementId x, ElementId y) {
  return square(g, g.mul(x, y)) == square(g, g.mul(y, x));
}

// (xy)^2 == (yx)^2 for all pairs.
inline PairVerdict is_square_commutative(const CayleyGroup& g) {
  return scan_pairs(g, [&](ElementId x, ElementId y) { return squares_commute(g, x, y); });
}

// ---------------------------------------------------------------------------
// Generator criteria

struct RelationCheck {
  std::string name;
  bool holds = true;
  std::optional<std::vector<ElementId>> witness;
};

struct CriterionReport {
  std::vector<RelationCheck> relations;
  bool overall = true;

  const RelationCheck* find(std::string_view name) const {
    for (const auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }
};

inline constexpr std::string_view kRelB2A = "b^2 a = a b^2";
inline constexpr std::string_view kRelA2B = "a^2 b = b a^2";
inline constexpr std::string_view kRelABSquared = "(ab)^2 = (ba)^2";

inline constexpr std::string_view kRelPairSquare = "x1 x2^2 = x2^2 x1";
inline constexpr std::string_view kRelTripleSquare = "x1 (x2 x3)^2 = (x2 x3)^2 x1";
inline constexpr std::string_view kRelPairSwap = "(x1 x2)^2 = (x2 x1)^2";

inline void require_generating(const CayleyGroup& g, std::span<const ElementId> gens) {
  for (ElementId x : gens)
    if (!g.contains(x))
      throw NotGenerating("generator id " + std::to_string(x.value) + " out of range");
  if (!generates(g, gens))
    throw NotGenerating("the given elements generate a subgroup of order " +
                        std::to_string(subgroup_generated(g, gens).size()) +
                        ", not the whole group of order " + std::to_string(g.order()));
}

inline void require_distinct(std::span<const ElementId> gens) {
  std::vector<ElementId> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw NotGenerating("generator list contains repeated elements");
}

// The three relations b^2 a = a b^2, a^2 b = b a^2 and (ab)^2 = (ba)^2 for a
// generating pair. All three hold exactly when G is square commutative.
inline CriterionReport two_generator_criterion(const CayleyGroup& g, ElementId a,
                                               ElementId b) {
  const ElementId pair[] = {a, b};
  require_generating(g, pair);
  const auto mk = [&](std::string_view name, bool holds) {
    RelationCheck r{std::string(name), holds, std::nullopt};
    if (!holds) r.witness = std::vector<ElementId>{a, b};
    return r;
  };
  const ElementId a2 = square(g, a), b2 = square(g, b);
  CriterionReport rep;
  rep.relations.push_back(mk(kRelB2A, g.mul(b2, a) == g.mul(a, b2)));
  rep.relations.push_back(mk(kRelA2B, g.mul(a2, b) == g.mul(b, a2)));
  rep.relations.push_back(mk(kRelABSquared, squares_commute(g, a, b)));
  rep.overall = std::all_of(rep.relations.begin(), rep.relations.end(),
                            [](const RelationCheck& r) { return r.holds; });
  return rep;
}

// For n >= 3 distinct generators: x1 x2^2 = x2^2 x1 and (x1 x2)^2 = (x2 x1)^2
// over ordered pairs of distinct generators, x1 (x2 x3)^2 = (x2 x3)^2 x1
// over ordered triples of distinct generators. Witnesses are the least
// failing index tuple, reported as elements.
inline CriterionReport n_generator_criterion(const CayleyGroup& g,
                                             std::span<const ElementId> gens) {
  if (gens.size() < 3)
    throw TooFewGenerators("the n-generator criterion needs at least 3 generators, got " +
                           std::to_string(gens.size()));
  require_generating(g, gens);
  require_distinct(gens);

  const std::size_t n = gens.size();
  RelationCheck pair_square{std::string(kRelPairSquare), true, std::nullopt};
  RelationCheck triple_square{std::string(kRelTripleSquare), true, std::nullopt};
  RelationCheck pair_swap{std::string(kRelPairSwap), true, std::nullopt};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const ElementId x1 = gens[i], x2 = gens[j];
      if (pair_square.holds) {
        const ElementId s = square(g, x2);
        if (!g.commute(x1, s)) {
          pair_square.holds = false;
          pair_square.witness = std::vector<ElementId>{x1, x2};
        }
      }
      if (pair_swap.holds && !squares_commute(g, x1, x2)) {
        pair_swap.holds = false;
        pair_swap.witness = std::vector<ElementId>{x1, x2};
      }
      for (std::size_t k = 0; k < n && triple_square.holds; ++k) {
        if (k == i || k == j) continue;
        const ElementId s = square(g, g.mul(x2, gens[k]));
        if (!g.commute(x1, s)) {
          triple_square.holds = false;
          triple_square.witness = std::vector<ElementId>{x1, x2, gens[k]};
        }
      }
    }

  CriterionReport rep;
  rep.relations = {pair_square, triple_square, pair_swap};
  rep.overall = pair_square.holds && triple_square.holds && pair_swap.holds;
  return rep;
}

// ---------------------------------------------------------------------------
// Z2, hat(G), squares

inline SubgroupSet z2_subgroup(const CayleyGroup& g) {
  ElementSet out;
  const SubgroupSet z_g = center(g);
  for (ElementId z : z_g.members())
    if (square(g, z) == g.identity()) out.push_back(z);
  return SubgroupSet(g, std::move(out));
}

inline QuotientMap hat_group(const CayleyGroup& g) {
  return quotient_group(g, z2_subgroup(g));
}

// Every square commutes with every element; witness (x, y) means x^2 y != y x^2.
inline PairVerdict squares_central(const CayleyGroup& g) {
  return scan_pairs(g, [&](ElementId x, ElementId y) { return g.commute(square(g, x), y); });
}

inline bool g_mod_center_abelian(const CayleyGroup& g) {
  return static_cast<bool>(is_abelian(quotient_group(g, center(g)).quotient));
}

// ---------------------------------------------------------------------------
// C_n sets and coverage

inline constexpr std::size_t kMaxCSetGenerators = 16;

// All 2^n subset products (empty subset first, masks in increasing order),
// duplicates kept.
inline std::vector<ElementId> c_products(const CayleyGroup& g,
                                         std::span<const ElementId> gens) {
  if (gens.size() > kMaxCSetGenerators)
    throw GeneratorListTooLong("C_n is limited to " + std::to_string(kMaxCSetGenerators) +
                               " generators, got " + std::to_string(gens.size()));
  std::vector<ElementId> out;
  const std::size_t n = gens.size();
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElementId p = g.identity();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) p = g.mul(p, gens[i]);
    out.push_back(p);
  }
  return out;
}

inline ElementSet c_set(const CayleyGroup& g, std::span<const ElementId> gens) {
  return normalize(c_products(g, gens));
}

// G == C_n · Z(G)
inline bool coverage_check(const CayleyGroup& g, std::span<const ElementId> gens) {
  require_generating(g, gens);
  const SubgroupSet z = center(g);
  return product_set(g, c_set(g, gens), z.members()).size() == g.order();
}

// ---------------------------------------------------------------------------
// Normal form x = a^ha b^hb (ab)^(2 lambda)

struct NormalForm2 {
  std::size_t h_a = 0;
  std::size_t h_b = 0;
  int lambda = 0;

  friend bool operator==(const NormalForm2&, const NormalForm2&) = default;
};

// Least (h_a, h_b, lambda) with h_a < ord(a), h_b < ord(b), lambda in {0,1}.
inline NormalForm2 normal_form_two_gen(const CayleyGroup& g, ElementId a, ElementId b,
                                       ElementId x) {
  const ElementId pair[] = {a, b};
  require_generating(g, pair);
  const ElementId ab2 = square(g, g.mul(a, b));
  const std::size_t oa = g.element_order(a), ob = g.element_order(b);
  ElementId ap = g.identity();
  for (std::size_t ha = 0; ha < oa; ++ha, ap = g.mul(ap, a)) {
    ElementId bp = g.identity();
    for (std::size_t hb = 0; hb < ob; ++hb, bp = g.mul(bp, b)) {
      const ElementId base = g.mul(ap, bp);
      if (base == x) return {ha, hb, 0};
      if (g.mul(base, ab2) == x) return {ha, hb, 1};
    }
  }
  throw NoDecomposition("element " + g.label(x) +
                        " is not of the form a^i b^j (ab)^(2l)");
}

inline ElementId evaluate_normal_form(const CayleyGroup& g, ElementId a, ElementId b,
                                      const NormalForm2& nf) {
  ElementId r = g.mul(g.pow(a, static_cast<long long>(nf.h_a)),
                      g.pow(b, static_cast<long long>(nf.h_b)));
  if (nf.lambda) r = g.mul(r, square(g, g.mul(a, b)));
  return r;
}

// ---------------------------------------------------------------------------
// The ~ relation: x ~ y iff x = y d for some d in Z2(G)

// The d in Z2(G) with xy = yx d, if any. d is unique when it exists.
inline std::optional<ElementId> sim_witness(const CayleyGroup& g, ElementId x, ElementId y) {
  const ElementId d = g.mul(g.inv(g.mul(y, x)), g.mul(x, y));
  if (z2_subgroup(g).contains(d)) return d;
  return std::nullopt;
}

// Same as sim_witness for every pair, reusing one Z2 computation. Returns the
// least pair without a witness.
inline std::optional<ElementPair> sim_failure(const CayleyGroup& g) {
  const SubgroupSet z2 = z2_subgroup(g);
  const PairVerdict v = scan_pairs(g, [&](ElementId x, ElementId y) {
    return z2.contains(g.mul(g.inv(g.mul(y, x)), g.mul(x, y)));
  });
  return v.witness;
}

// ---------------------------------------------------------------------------
// Identities that hold in every square commutative group

struct IntRange {
  long long lo = 0;
  long long hi = 0;
};

struct SandwichCounterexample {
  ElementId x, y;
  long long m = 0, n = 0;
};

// (xyx)^m y^n == y^n (xyx)^m for all x, y and m, n in the given ranges.
inline std::optional<SandwichCounterexample> sandwich_check(const CayleyGroup& g,
                                                            IntRange m_range,
                                                            IntRange n_range) {
  if (auto w = is_square_commutative(g).witness)
    throw NotSquareCommutative("sandwich identity requires a square commutative group; (" +
                               g.label(w->first) + ", " + g.label(w->second) +
                               ") violates it");
  for (ElementId x : g.elements())
    for (ElementId y : g.elements()) {
      const ElementId xyx = g.mul(g.mul(x, y), x);
      for (long long m = m_range.lo; m <= m_range.hi; ++m) {
        const ElementId left = g.pow(xyx, m);
        for (long long n = n_range.lo; n <= n_range.hi; ++n) {
          const ElementId right = g.pow(y, n);
          if (!g.commute(left, right)) return SandwichCounterexample{x, y, m, n};
        }
      }
    }
  return std::nullopt;
}

// (xy)^4 == x^4 y^4 for all pairs.
inline std::optional<ElementPair> fourth_power_check(const CayleyGroup& g) {
  return scan_pairs(g, [&](ElementId x, ElementId y) {
           return g.pow(g.mul(x, y), 4) == g.mul(g.pow(x, 4), g.pow(y, 4));
         })
      .witness;
}

struct ReorderCounterexample {
  std::vector<std::size_t> sequence;  // generator indices
  std::size_t position = 0;           // swapped positions are (position, position+1)
  ElementId defect;                   // (original product)^-1 (swapped product)
};

// For every generator index sequence of length m <= max_len and every
// adjacent transposition, the two products differ by an element of Z2(G).
// Adjacent transpositions generate S_m, so this covers every reordering.
inline std::optional<ReorderCounterexample> reorder_defect_check(
    const CayleyGroup& g, std::span<const ElementId> gens, std::size_t max_len) {
  require_generating(g, gens);
  const SubgroupSet z2 = z2_subgroup(g);
  const std::size_t k = gens.size();
  if (k == 0) return std::nullopt;
  // Odometer over all k^m index sequences.
  const auto advance = [k](std::vector<std::size_t>& seq) {
    for (std::size_t at = seq.size(); at-- > 0;) {
      if (++seq[at] < k) return true;
      seq[at] = 0;
    }
    return false;
  };
  for (std::size_t m = 2; m <= max_len; ++m) {
    std::vector<std::size_t> seq(m, 0);
    do {
      ElementId base = g.identity();
      for (std::size_t i : seq) base = g.mul(base, gens[i]);
      for (std::size_t pos = 0; pos + 1 < m; ++pos) {
        std::vector<std::size_t> swapped = seq;
        std::swap(swapped[pos], swapped[pos + 1]);
        ElementId other = g.identity();
        for (std::size_t i : swapped) other = g.mul(other, gens[i]);
        const ElementId d = g.mul(g.inv(base), other);
        if (!z2.contains(d)) return ReorderCounterexample{seq, pos, d};
      }
    } while (advance(seq));
  }
  return std::nullopt;
}

// With the three two-generator relations in force, a^p, b^p and (ab)^p are
// central for every even p below the respective element order. Returns the
// first non-central power as (element, p).
inline std::optional<std::pair<ElementId, std::size_t>> even_powers_central(
    const CayleyGroup& g, ElementId a, ElementId b) {
  const SubgroupSet z = center(g);
  for (ElementId base : {a, b, g.mul(a, b)})
    for (std::size_t p = 2; p <= g.element_order(base); p += 2)
      if (!z.contains(g.pow(base, static_cast<long long>(p)))) return std::pair{base, p};
  return std::nullopt;
}

struct PowerRelationCounterexample {
  ElementId x, y;
  long long p = 0, q = 0;
};

// Whenever x^p y = y x^q (1 <= p, q <= max_exp) in a square commutative group:
// x^(2(p-q)) = e if p and q are both odd, x^(p-q) = e otherwise.
inline std::optional<PowerRelationCounterexample> power_relation_check(
    const CayleyGroup& g, long long max_exp) {
  for (ElementId x : g.elements())
    for (ElementId y : g.elements())
      for (long long p = 1; p <= max_exp; ++p)
        for (long long q = 1; q <= max_exp; ++q) {
          if (g.mul(g.pow(x, p), y) != g.mul(y, g.pow(x, q))) continue;
          const bool both_odd = (p % 2 != 0) && (q % 2 != 0);
          const long long k = both_odd ? 2 * (p - q) : p - q;
          if (g.pow(x, k) != g.identity()) return PowerRelationCounterexample{x, y, p, q};
        }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Biconditionals that must agree on every 2-generated group

struct Biconditional {
  std::string name;
  bool applicable = false;
  bool lhs = false;
  bool rhs = false;
  bool holds() const { return !applicable || lhs == rhs; }
};

struct ConditionalReport {
  std::vector<Biconditional> clauses;
  bool all_hold() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const Biconditional& c) { return c.holds(); });
  }
};

// (i)   sq-comm <=> (G/Z abelian and (ab)^2 = (ba)^2)
// (ii)  if a^2 b = b a^2: sq-comm <=> G/Z abelian
// (iii) if ord(a) or ord(b) is odd: sq-comm <=> abelian
inline ConditionalReport conditional_equivalence_checks(const CayleyGroup& g, ElementId a,
                                                        ElementId b) {
  const ElementId pair[] = {a, b};
  require_generating(g, pair);
  const bool sq = static_cast<bool>(is_square_commutative(g));
  const bool gz = g_mod_center_abelian(g);
  const bool ab_sq = squares_commute(g, a, b);
  const bool a2b = g.commute(square(g, a), b);
  const bool odd = g.element_order(a) % 2 == 1 || g.element_order(b) % 2 == 1;

  ConditionalReport rep;
  rep.clauses.push_back({"sq-comm <=> G/Z abelian and (ab)^2 = (ba)^2", true, sq, gz && ab_sq});
  rep.clauses.push_back({"a^2 b = b a^2 => (sq-comm <=> G/Z abelian)", a2b, sq, gz});
  rep.clauses.push_back({"ord(a) or ord(b) odd => (sq-comm <=> abelian)", odd, sq,
                         static_cast<bool>(is_abelian(g))});
  return rep;
}

// ---------------------------------------------------------------------------
// Full audit

struct AnalysisReport {
  std::size_t order = 0;
  bool is_square_commutative = false;
  std::optional<ElementPair> witness;
  std::size_t center_size = 0;
  std::size_t z2_size = 0;
  std::size_t hat_order = 0;
  bool hat_abelian = false;
  bool squares_central = false;
  bool g_mod_z_abelian = false;
  std::vector<ElementId> generators;
  std::optional<CriterionReport> criteria;
  std::optional<bool> coverage_ok;
  bool consistent = false;
};

// Runs every check. Criteria use the two-generator form for two generators
// and the n-generator form for three or more; coverage is computed whenever
// generators are available. `consistent` is true when all of the
// equivalences and implications that must hold actually agree.
inline AnalysisReport analyze(const CayleyGroup& g,
                              std::optional<std::vector<ElementId>> gens = std::nullopt) {
  AnalysisReport r;
  r.order = g.order();
  const PairVerdict sc = is_square_commutative(g);
  r.is_square_commutative = sc.holds;
  r.witness = sc.witness;
  r.center_size = center(g).size();
  const QuotientMap hat = hat_group(g);
  r.z2_size = hat.kernel.size();
  r.hat_order = hat.quotient.order();
  r.hat_abelian = static_cast<bool>(is_abelian(hat.quotient));
  r.squares_central = static_cast<bool>(squares_central(g));
  r.g_mod_z_abelian = g_mod_center_abelian(g);

  if (gens) {
    require_generating(g, *gens);
    require_distinct(*gens);
  } else {
    std::vector<ElementId> canon;
    for (ElementId x : g.generators())
      if (std::find(canon.begin(), canon.end(), x) == canon.end()) canon.push_back(x);
    gens = std::move(canon);
  }
  r.generators = *gens;
  if (gens->size() == 2) {
    r.criteria = two_generator_criterion(g, (*gens)[0], (*gens)[1]);
  } else if (gens->size() >= 3) {
    r.criteria = n_generator_criterion(g, *gens);
  }
  if (!gens->empty() && gens->size() <= kMaxCSetGenerators)
    r.coverage_ok = coverage_check(g, *gens);

  const bool sq = r.is_square_commutative;
  r.consistent = sq == r.hat_abelian && sq == r.squares_central &&
                 (!sq || r.g_mod_z_abelian) &&
                 (!r.criteria || r.criteria->overall == sq) &&
                 (!sq || !r.coverage_ok || *r.coverage_ok);
  return r;
}

}  // namespace sqcomm

#endif  // SQCOMM_SQCOMM_HPP_
