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

// Deterministic constructors for the group families the toolkit works with.
//
// Spec strings (used by the CLI): cyclic:n, dihedral:n, elemabelian:p:k, q8,
// heisenberg:p, metacyclic:n:m:j, bs:p:q (extra relations supplied
// separately).

#ifndef SQCOMM_CATALOG_HPP_
#define SQCOMM_CATALOG_HPP_

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqcomm/error.hpp"
#include "sqcomm/group.hpp"
#include "sqcomm/presentation.hpp"
#include "sqcomm/todd_coxeter.hpp"

namespace sqcomm {

struct CatalogEntry {
  std::string name;
  CayleyGroup group;
  std::vector<ElementId> canonical_generators;
  std::vector<std::pair<std::string, long long>> family_params;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string power_label(std::string_view base, long long k) {
  if (k == 0) return "e";
  if (k == 1) return std::string(base);
  return std::string(base) + "^" + std::to_string(k);
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

inline long long pow_mod(long long base, long long exp, long long n) {
  long long r = 1 % n;
  base = mod(base, n);
  for (long long i = 0; i < exp; ++i) r = (r * base) % n;
  return r;
}

inline CatalogEntry from_table(std::string name, std::size_t order,
                               std::vector<std::uint32_t> table,
                               std::vector<std::string> labels,
                               std::vector<ElementId> gens,
                               std::vector<std::pair<std::string, long long>> params) {
  CayleyGroup g = build_group(order, std::move(table), std::move(labels), gens);
  return CatalogEntry{std::move(name), std::move(g), std::move(gens), std::move(params), {}};
}

}  // namespace detail

// Z/n written multiplicatively: e, g, g^2, ...; generator g.
inline CatalogEntry cyclic(long long n) {
  if (n < 1 || n > 4096) throw BadParameter("cyclic:n needs 1 <= n <= 4096");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> t(un * un);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < un; ++x) {
    labels.push_back(detail::power_label("g", static_cast<long long>(x)));
    for (std::size_t y = 0; y < un; ++y) t[x * un + y] = static_cast<std::uint32_t>((x + y) % un);
  }
  return detail::from_table("C" + std::to_string(n), un, std::move(t), std::move(labels),
                            {ElementId{n == 1 ? 0u : 1u}}, {{"n", n}});
}

// (Z/p)^k with basis x1..xk; labels are words like "x1^2x3".
inline CatalogEntry elementary_abelian(long long p, long long k) {
  if (!detail::is_prime(p) || k < 1)
    throw BadParameter("elemabelian:p:k needs p prime and k >= 1");
  long long n = 1;
  for (long long i = 0; i < k; ++i) {
    n *= p;
    if (n > 4096) throw BadParameter("elemabelian:p:k needs p^k <= 4096");
  }
  const auto un = static_cast<std::size_t>(n);
  const auto digits = [&](std::size_t x) {
    std::vector<long long> d(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) {
      d[static_cast<std::size_t>(i)] = static_cast<long long>(x) % p;
      x /= static_cast<std::size_t>(p);
    }
    return d;
  };
  std::vector<std::uint32_t> t(un * un);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < un; ++x) {
    const auto dx = digits(x);
    std::string label;
    for (long long i = 0; i < k; ++i)
      if (dx[static_cast<std::size_t>(i)])
        label += detail::power_label("x" + std::to_string(i + 1), dx[static_cast<std::size_t>(i)]);
    labels.push_back(label.empty() ? "e" : label);
    for (std::size_t y = 0; y < un; ++y) {
      const auto dy = digits(y);
      std::size_t z = 0, place = 1;
      for (long long i = 0; i < k; ++i) {
        z += static_cast<std::size_t>((dx[static_cast<std::size_t>(i)] + dy[static_cast<std::size_t>(i)]) % p) * place;
        place *= static_cast<std::size_t>(p);
      }
      t[x * un + y] = static_cast<std::uint32_t>(z);
    }
  }
  std::vector<ElementId> gens;
  std::size_t place = 1;
  for (long long i = 0; i < k; ++i, place *= static_cast<std::size_t>(p))
    gens.emplace_back(static_cast<std::uint32_t>(place));
  std::string name = k == 1 ? "C" + std::to_string(p)
                            : "C" + std::to_string(p) + "^" + std::to_string(k);
  return detail::from_table(std::move(name), un, std::move(t), std::move(labels),
                            std::move(gens), {{"p", p}, {"k", k}});
}

// D_{2n}: elements a^i (index i) and a^i b (index n+i); generators (a, b).
// (a^i b^s)(a^j b^t) = a^(i + (-1)^s j) b^(s+t).
inline CatalogEntry dihedral(long long n) {
  if (n < 1 || n > 2048) throw BadParameter("dihedral:n needs 1 <= n <= 2048");
  const auto un = static_cast<std::size_t>(n), order = 2 * un;
  std::vector<std::uint32_t> t(order * order);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const long long i = static_cast<long long>(x % un), s = static_cast<long long>(x / un);
    const std::string rot = detail::power_label("a", i);
    labels.push_back(s == 0 ? rot : (i == 0 ? "b" : rot + "b"));
    for (std::size_t y = 0; y < order; ++y) {
      const long long j = static_cast<long long>(y % un), u = static_cast<long long>(y / un);
      const long long r = detail::mod(s == 0 ? i + j : i - j, n);
      const long long f = (s + u) % 2;
      t[x * order + y] = static_cast<std::uint32_t>(f * n + r);
    }
  }
  return detail::from_table("D" + std::to_string(2 * n), order, std::move(t), std::move(labels),
                            {ElementId{n == 1 ? 0u : 1u}, ElementId{static_cast<std::uint32_t>(un)}},
                            {{"n", n}});
}

// {±1, ±i, ±j, ±k}; generators (i, j).
inline CatalogEntry quaternion8() {
  // unit index: 0=1, 1=i, 2=j, 3=k; element index = 2*unit + sign bit.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr const char* kNames[4] = {"1", "i", "j", "k"};
  std::vector<std::uint32_t> t(64);
  std::vector<std::string> labels;
  for (int x = 0; x < 8; ++x) {
    labels.push_back(std::string(x % 2 ? "-" : "") + kNames[x / 2]);
    for (int y = 0; y < 8; ++y) {
      const int u = kUnit[x / 2][y / 2];
      const int s = (x % 2) ^ (y % 2) ^ kSign[x / 2][y / 2];
      t[static_cast<std::size_t>(x * 8 + y)] = static_cast<std::uint32_t>(2 * u + s);
    }
  }
  return detail::from_table("Q8", 8, std::move(t), std::move(labels), {ElementId{2}, ElementId{4}}, {});
}

// Upper unitriangular 3x3 matrices over Z/p, element [[1,x,y],[0,1,z],[0,0,1]]
// labelled "(x,y,z)". Generators: the x-entry and the z-entry transvections.
inline CatalogEntry heisenberg_mod(long long p) {
  if (!detail::is_prime(p) || p > 7) throw BadParameter("heisenberg:p needs p prime, p <= 7");
  const auto up = static_cast<std::size_t>(p), order = up * up * up;
  const auto index = [&](long long x, long long y, long long z) {
    return static_cast<std::uint32_t>((x * p + y) * p + z);
  };
  std::vector<std::uint32_t> t(order * order);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    const long long x = static_cast<long long>(a / (up * up)), y = static_cast<long long>(a / up % up),
                    z = static_cast<long long>(a % up);
    labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
    for (std::size_t b = 0; b < order; ++b) {
      const long long x2 = static_cast<long long>(b / (up * up)), y2 = static_cast<long long>(b / up % up),
                      z2 = static_cast<long long>(b % up);
      t[a * order + b] = index((x + x2) % p, (y + y2 + x * z2) % p, (z + z2) % p);
    }
  }
  return detail::from_table("Heis" + std::to_string(p), order, std::move(t), std::move(labels),
                            {ElementId{index(1, 0, 0)}, ElementId{index(0, 0, 1)}}, {{"p", p}});
}

// <a, b | a^n = b^m = e, ab = ba^j>. When j^m = 1 (mod n) the elements are
// b^i a^k with (b^i a^k)(b^l a^r) = b^(i+l) a^(k j^l + r), giving order mn.
// Otherwise the presentation collapses; it is enumerated instead and the
// actual order is reported in a warning.
inline CatalogEntry metacyclic(long long n, long long m, long long j,
                               std::size_t max_cosets = kDefaultMaxCosets) {
  if (n < 1 || m < 1 || j < 1) throw BadParameter("metacyclic:n:m:j needs n, m, j >= 1");
  if (n * m > 4096) throw BadParameter("metacyclic:n:m:j needs n*m <= 4096");
  const std::string name = "M(" + std::to_string(n) + "," + std::to_string(m) + "," +
                           std::to_string(j) + ")";
  const std::vector<std::pair<std::string, long long>> params{{"n", n}, {"m", m}, {"j", j}};

  if (detail::pow_mod(j, m, n) != 1 % n) {
    const std::string text = "< a, b | a^" + std::to_string(n) + " = b^" + std::to_string(m) +
                             " = 1, a b = b a^" + std::to_string(j) + " >";
    Realization r = todd_coxeter(parse_presentation(text), max_cosets);
    CatalogEntry e{name, r.group, r.assignment, params, {}};
    e.warnings.push_back("j^m != 1 (mod n): presentation collapses to order " +
                         std::to_string(r.group.order()) + " instead of " +
                         std::to_string(n * m));
    return e;
  }

  const auto un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m), order = un * um;
  std::vector<long long> jpow(um);
  for (std::size_t l = 0; l < um; ++l) jpow[l] = detail::pow_mod(j, static_cast<long long>(l), n);
  std::vector<std::uint32_t> t(order * order);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x / un, k = x % un;
    std::string label;
    if (i) label += detail::power_label("b", static_cast<long long>(i));
    if (k) label += detail::power_label("a", static_cast<long long>(k));
    labels.push_back(label.empty() ? "e" : label);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t l = y / un, r = y % un;
      const std::size_t bi = (i + l) % um;
      const auto ak = static_cast<std::size_t>(
          detail::mod(static_cast<long long>(k) * jpow[l] + static_cast<long long>(r), n));
      t[x * order + y] = static_cast<std::uint32_t>(bi * un + ak);
    }
  }
  const ElementId a{n == 1 ? 0u : 1u};
  const ElementId b{m == 1 ? 0u : static_cast<std::uint32_t>(un)};
  std::vector<ElementId> gens{a};
  if (b != a) gens.push_back(b);
  return detail::from_table(name, order, std::move(t), std::move(labels), std::move(gens), params);
}

// Finite quotient <a, b | a^p b = b a^q, extra> realized by coset enumeration.
inline CatalogEntry bs_relation_quotient(long long p, long long q, std::string_view extra,
                                         std::size_t max_cosets = kDefaultMaxCosets) {
  if (p == 0 || q == 0) throw BadParameter("bs:p:q needs nonzero p and q");
  std::string text = "< a, b | a^" + std::to_string(p) + " b = b a^" + std::to_string(q);
  if (!extra.empty()) text += ", " + std::string(extra);
  text += " >";
  Realization r = todd_coxeter(parse_presentation(text), max_cosets);
  return CatalogEntry{"BS(" + std::to_string(p) + "," + std::to_string(q) + ")/<" +
                          std::string(extra) + ">",
                      r.group, r.assignment, {{"p", p}, {"q", q}}, {}};
}

// Product entry; canonical generators are the images of both lists.
inline CatalogEntry product(const CatalogEntry& a, const CatalogEntry& b) {
  CayleyGroup g = direct_product(with_generators(a.group, a.canonical_generators),
                                 with_generators(b.group, b.canonical_generators));
  std::vector<ElementId> gens(g.generators().begin(), g.generators().end());
  return CatalogEntry{a.name + "x" + b.name, std::move(g), std::move(gens), {}, {}};
}

// Every group of order 1..11 up to isomorphism (19 classes), in order of
// increasing order.
inline std::vector<CatalogEntry> small_groups_under_12() {
  auto rename = [](CatalogEntry e, std::string name) {
    e.name = std::move(name);
    return e;
  };
  std::vector<CatalogEntry> out;
  out.push_back(cyclic(1));
  out.push_back(cyclic(2));
  out.push_back(cyclic(3));
  out.push_back(cyclic(4));
  out.push_back(elementary_abelian(2, 2));
  out.push_back(cyclic(5));
  out.push_back(cyclic(6));
  out.push_back(dihedral(3));
  out.push_back(cyclic(7));
  out.push_back(cyclic(8));
  out.push_back(rename(product(cyclic(4), cyclic(2)), "C4xC2"));
  out.push_back(elementary_abelian(2, 3));
  out.push_back(dihedral(4));
  out.push_back(quaternion8());
  out.push_back(cyclic(9));
  out.push_back(elementary_abelian(3, 2));
  out.push_back(cyclic(10));
  out.push_back(dihedral(5));
  out.push_back(cyclic(11));
  return out;
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

inline long long parse_int(std::string_view s, std::string_view what) {
  long long v = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw BadParameter("expected an integer for " + std::string(what) + ", got '" +
                       std::string(s) + "'");
  return v;
}

}  // namespace detail

inline bool is_catalog_family(std::string_view family) {
  return family == "cyclic" || family == "dihedral" || family == "elemabelian" ||
         family == "q8" || family == "heisenberg" || family == "metacyclic" || family == "bs";
}

// Builds an entry from a spec string such as "dihedral:4" or "bs:2:2".
inline CatalogEntry from_spec(std::string_view spec, std::string_view extra_relations = {},
                              std::size_t max_cosets = kDefaultMaxCosets) {
  const auto parts = detail::split(spec, ':');
  const std::string_view family = parts[0];
  const auto want = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw BadParameter("catalog spec '" + std::string(spec) + "' needs " + std::to_string(n) +
                         " parameter(s)");
  };
  const auto arg = [&](std::size_t i) { return detail::parse_int(parts[i], spec); };
  CatalogEntry e;
  if (family == "cyclic") {
    want(1);
    e = cyclic(arg(1));
  } else if (family == "dihedral") {
    want(1);
    e = dihedral(arg(1));
  } else if (family == "elemabelian") {
    want(2);
    e = elementary_abelian(arg(1), arg(2));
  } else if (family == "q8") {
    want(0);
    e = quaternion8();
  } else if (family == "heisenberg") {
    want(1);
    e = heisenberg_mod(arg(1));
  } else if (family == "metacyclic") {
    want(3);
    e = metacyclic(arg(1), arg(2), arg(3), max_cosets);
  } else if (family == "bs") {
    want(2);
    return bs_relation_quotient(arg(1), arg(2), extra_relations, max_cosets);
  } else {
    throw BadParameter("unknown catalog family '" + std::string(family) + "'");
  }
  if (!extra_relations.empty())
    throw BadParameter("extra relations are only accepted by the bs family");
  return e;
}

}  // namespace sqcomm

#endif  // SQCOMM_CATALOG_HPP_
