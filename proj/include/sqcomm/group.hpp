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

// Dense table-based finite groups.
//
// A CayleyGroup is an immutable handle to a validated multiplication table.
// Copies share the underlying table, so passing groups by value is cheap and
// SubgroupSet / QuotientMap can hold their parent without lifetime games.
//
// Conventions used throughout the library:
//   * conj(x, y) = y^-1 x y.
//   * Witness pairs and triples are the lexicographically least by ElementId.
//   * Element sets are sorted, duplicate-free std::vector<ElementId>.

#ifndef SQCOMM_GROUP_HPP_
#define SQCOMM_GROUP_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sqcomm/error.hpp"

namespace sqcomm {

struct ElementId {
  std::uint32_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

using ElementSet = std::vector<ElementId>;
using ElementPair = std::pair<ElementId, ElementId>;

// Associativity is checked by a full O(n^3) scan up to this order; above it
// Light's test over a generating set is used instead (O(n^2 |S|)).
inline constexpr std::size_t kFullAssociativityScanLimit = 512;

class CayleyGroup;

CayleyGroup build_group(std::size_t order, std::vector<std::uint32_t> flat_table,
                        std::vector<std::string> labels,
                        std::vector<ElementId> generators);

class CayleyGroup {
 public:
  // The trivial group {e}.
  CayleyGroup() : CayleyGroup(build_group(1, {0}, {"e"}, {})) {}

  std::size_t order() const { return data_->order; }
  ElementId identity() const { return ElementId{data_->identity}; }

  ElementId mul(ElementId x, ElementId y) const {
    return ElementId{data_->mul[x.index() * data_->order + y.index()]};
  }
  ElementId inv(ElementId x) const { return ElementId{data_->inv[x.index()]}; }

  // Square-and-multiply; negative k goes through inv.
  ElementId pow(ElementId x, long long k) const {
    const long long ord = static_cast<long long>(element_order(x));
    long long r = k % ord;
    if (r < 0) r += ord;
    ElementId result = identity();
    ElementId base = x;
    while (r > 0) {
      if (r & 1) result = mul(result, base);
      base = mul(base, base);
      r >>= 1;
    }
    return result;
  }

  std::size_t element_order(ElementId x) const {
    return data_->element_orders[x.index()];
  }

  // y^-1 x y
  ElementId conj(ElementId x, ElementId y) const {
    return mul(mul(inv(y), x), y);
  }

  bool commute(ElementId x, ElementId y) const {
    return mul(x, y) == mul(y, x);
  }

  const std::string& label(ElementId x) const {
    return data_->labels[x.index()];
  }
  std::span<const std::string> labels() const { return data_->labels; }

  std::optional<ElementId> find(std::string_view label) const {
    auto it = data_->by_label.find(std::string(label));
    if (it == data_->by_label.end()) return std::nullopt;
    return ElementId{it->second};
  }

  std::span<const ElementId> generators() const { return data_->generators; }

  auto elements() const {
    return std::views::iota(std::uint32_t{0},
                            static_cast<std::uint32_t>(data_->order)) |
           std::views::transform([](std::uint32_t i) { return ElementId{i}; });
  }

  bool contains(ElementId x) const { return x.index() < data_->order; }

  // Row-major order x order table, entry x*order+y = x·y.
  std::span<const std::uint32_t> table() const { return data_->mul; }

  // True when both handles share one table.
  bool same_as(const CayleyGroup& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> inv;
    std::uint32_t identity = 0;
    std::vector<std::string> labels;
    std::vector<ElementId> generators;
    std::vector<std::size_t> element_orders;
    std::unordered_map<std::string, std::uint32_t> by_label;
  };

  explicit CayleyGroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend CayleyGroup build_group(std::size_t, std::vector<std::uint32_t>,
                                 std::vector<std::string>,
                                 std::vector<ElementId>);
};

namespace detail {

inline std::vector<bool> closure_mask(std::size_t order,
                                      std::span<const std::uint32_t> mul,
                                      std::span<const std::uint32_t> inv,
                                      std::uint32_t identity,
                                      std::span<const ElementId> seed) {
  std::vector<bool> seen(order, false);
  std::deque<std::uint32_t> queue{identity};
  seen[identity] = true;
  std::vector<std::uint32_t> moves;
  for (ElementId s : seed) {
    moves.push_back(s.value);
    moves.push_back(inv[s.index()]);
  }
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t m : moves) {
      std::uint32_t y = mul[x * order + m];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

inline bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

// Least (x,y,z) with (xy)z != x(yz), or nothing.
inline std::optional<std::vector<std::uint32_t>> least_associativity_failure(
    std::size_t n, std::span<const std::uint32_t> mul) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = mul[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (mul[xy * n + z] != mul[x * n + mul[y * n + z]])
          return std::vector<std::uint32_t>{static_cast<std::uint32_t>(x),
                                            static_cast<std::uint32_t>(y),
                                            static_cast<std::uint32_t>(z)};
      }
    }
  return std::nullopt;
}

// Light's associativity test. Requires a two-sided identity. S is grown
// until the left-normed products of S cover the table; then
// (x s) y == x (s y) for every s in S implies associativity.
inline bool light_associative(std::size_t n, std::span<const std::uint32_t> mul,
                              std::uint32_t identity) {
  std::vector<std::uint32_t> s_set;
  std::vector<bool> covered(n, false);
  auto reclose = [&] {
    std::fill(covered.begin(), covered.end(), false);
    std::vector<std::uint32_t> reached{identity};
    covered[identity] = true;
    for (std::size_t i = 0; i < reached.size(); ++i)
      for (std::uint32_t s : s_set) {
        std::uint32_t y = mul[reached[i] * n + s];
        if (!covered[y]) {
          covered[y] = true;
          reached.push_back(y);
        }
      }
  };
  reclose();
  for (std::uint32_t candidate = 0; candidate < n; ++candidate) {
    if (covered[candidate]) continue;
    s_set.push_back(candidate);
    reclose();
  }
  for (std::uint32_t s : s_set)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xs = mul[x * n + s];
      for (std::size_t y = 0; y < n; ++y)
        if (mul[xs * n + y] != mul[x * n + mul[s * n + y]]) return false;
    }
  return true;
}

}  // namespace detail

// Validates every group axiom exhaustively and computes identity, inverses
// and element orders. Check order: shape, labels, closure, associativity,
// identity, inverses, generators.
inline CayleyGroup build_group(std::size_t order,
                               std::vector<std::uint32_t> flat_table,
                               std::vector<std::string> labels,
                               std::vector<ElementId> generators) {
  const std::size_t n = order;
  if (n == 0 || flat_table.size() != n * n)
    throw NotAGroup("shape", {});
  if (labels.size() != n)
    throw BadLabels("expected " + std::to_string(n) + " labels, got " +
                    std::to_string(labels.size()));

  auto data = std::make_shared<CayleyGroup::Data>();
  data->order = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty() || detail::has_whitespace(labels[i]))
      throw BadLabels("label of element " + std::to_string(i) +
                      " is empty or contains whitespace");
    auto [it, inserted] =
        data->by_label.emplace(labels[i], static_cast<std::uint32_t>(i));
    if (!inserted)
      throw BadLabels("duplicate label '" + labels[i] + "' on elements " +
                      std::to_string(it->second) + " and " + std::to_string(i));
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (flat_table[x * n + y] >= n)
        throw NotAGroup("closure", {static_cast<std::uint32_t>(x),
                                    static_cast<std::uint32_t>(y)});

  if (n <= kFullAssociativityScanLimit) {
    if (auto w = detail::least_associativity_failure(n, flat_table))
      throw NotAGroup("associativity", *w);
  }

  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = flat_table[e * n + x] == x && flat_table[x * n + e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("identity", {});

  std::vector<std::uint32_t> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::uint32_t y = 0; y < n && !found; ++y) {
      if (flat_table[x * n + y] == *identity &&
          flat_table[y * n + x] == *identity) {
        inv[x] = y;
        found = true;
      }
    }
    if (!found) throw NotAGroup("inverse", {static_cast<std::uint32_t>(x)});
  }

  if (n > kFullAssociativityScanLimit &&
      !detail::light_associative(n, flat_table, *identity)) {
    auto w = detail::least_associativity_failure(n, flat_table);
    throw NotAGroup("associativity", w.value_or(std::vector<std::uint32_t>{}));
  }

  for (ElementId g : generators)
    if (g.index() >= n)
      throw GeneratorsDoNotGenerate("generator id " + std::to_string(g.value) +
                                    " out of range");
  if (!generators.empty()) {
    auto mask = detail::closure_mask(n, flat_table, inv, *identity, generators);
    if (std::find(mask.begin(), mask.end(), false) != mask.end())
      throw GeneratorsDoNotGenerate(
          "generators span a proper subgroup of order " +
          std::to_string(std::count(mask.begin(), mask.end(), true)) +
          " in a group of order " + std::to_string(n));
  }

  data->element_orders.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    std::uint32_t p = static_cast<std::uint32_t>(x);
    while (p != *identity) {
      p = flat_table[p * n + x];
      ++k;
    }
    data->element_orders[x] = k;
  }

  data->mul = std::move(flat_table);
  data->inv = std::move(inv);
  data->identity = *identity;
  data->labels = std::move(labels);
  data->generators = std::move(generators);
  return CayleyGroup(std::move(data));
}

// Nested-table convenience form.
inline CayleyGroup build_group(const std::vector<std::vector<std::uint32_t>>& table,
                               std::vector<std::string> labels,
                               std::vector<ElementId> generators) {
  const std::size_t n = table.size();
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw NotAGroup("shape", {});
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return build_group(n, std::move(flat), std::move(labels),
                     std::move(generators));
}

// Same table, different distinguished generators (validated).
inline CayleyGroup with_generators(const CayleyGroup& g,
                                   std::vector<ElementId> generators) {
  return build_group(g.order(),
                     std::vector<std::uint32_t>(g.table().begin(), g.table().end()),
                     std::vector<std::string>(g.labels().begin(), g.labels().end()),
                     std::move(generators));
}

// Looks up a comma- or space-separated list of labels.
inline std::optional<std::vector<ElementId>> find_all(
    const CayleyGroup& g, std::span<const std::string> labels) {
  std::vector<ElementId> out;
  for (const auto& l : labels) {
    auto id = g.find(l);
    if (!id) return std::nullopt;
    out.push_back(*id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

class SubgroupSet {
 public:
  // Validates membership, identity and closure; throws NotASubgroup.
  SubgroupSet(CayleyGroup parent, std::vector<ElementId> members)
      : parent_(std::move(parent)), mask_(parent_.order(), false) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (ElementId x : members) {
      if (!parent_.contains(x))
        throw NotASubgroup("element id " + std::to_string(x.value) +
                           " out of range");
      mask_[x.index()] = true;
    }
    members_ = std::move(members);
    if (!contains(parent_.identity()))
      throw NotASubgroup("subset does not contain the identity");
    for (ElementId x : members_) {
      if (!contains(parent_.inv(x)))
        throw NotASubgroup("not closed under inverse at " + parent_.label(x));
      for (ElementId y : members_)
        if (!contains(parent_.mul(x, y)))
          throw NotASubgroup("not closed under multiplication at (" +
                             parent_.label(x) + ", " + parent_.label(y) + ")");
    }
  }

  const CayleyGroup& parent() const { return parent_; }
  std::span<const ElementId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ElementId x) const {
    return x.index() < mask_.size() && mask_[x.index()];
  }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

 private:
  CayleyGroup parent_;
  std::vector<ElementId> members_;
  std::vector<bool> mask_;
};

inline SubgroupSet trivial_subgroup(const CayleyGroup& g) {
  return SubgroupSet(g, {g.identity()});
}

inline SubgroupSet whole_group(const CayleyGroup& g) {
  auto e = g.elements();
  return SubgroupSet(g, ElementSet(e.begin(), e.end()));
}

// Breadth-first closure of the seed under multiplication and inversion.
inline SubgroupSet subgroup_generated(const CayleyGroup& g,
                                      std::span<const ElementId> seed) {
  for (ElementId s : seed)
    if (!g.contains(s))
      throw NotASubgroup("seed id " + std::to_string(s.value) + " out of range");
  std::vector<ElementId> moves;
  for (ElementId s : seed) {
    moves.push_back(s);
    moves.push_back(g.inv(s));
  }
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementId> found{g.identity()};
  seen[g.identity().index()] = true;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (ElementId m : moves) {
      ElementId y = g.mul(found[i], m);
      if (!seen[y.index()]) {
        seen[y.index()] = true;
        found.push_back(y);
      }
    }
  return SubgroupSet(g, std::move(found));
}

inline bool generates(const CayleyGroup& g, std::span<const ElementId> gens) {
  return subgroup_generated(g, gens).size() == g.order();
}

inline SubgroupSet center(const CayleyGroup& g) {
  ElementSet z;
  for (ElementId x : g.elements()) {
    bool central = true;
    for (ElementId y : g.elements())
      if (!g.commute(x, y)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return SubgroupSet(g, std::move(z));
}

// A truth value plus, on failure, the lexicographically least witness pair.
struct PairVerdict {
  bool holds = true;
  std::optional<ElementPair> witness;

  explicit operator bool() const { return holds; }
};

// Scans (x, y) in lexicographic order and reports the first pair for which
// `ok` is false.
template <typename Pred>
PairVerdict scan_pairs(const CayleyGroup& g, Pred ok) {
  for (ElementId x : g.elements())
    for (ElementId y : g.elements())
      if (!ok(x, y)) return PairVerdict{false, ElementPair{x, y}};
  return PairVerdict{};
}

inline PairVerdict is_abelian(const CayleyGroup& g) {
  return scan_pairs(g, [&](ElementId x, ElementId y) { return g.commute(x, y); });
}

// Least (h, g) with conj(h, g) outside H, lexicographic in (h, g).
inline std::optional<ElementPair> normality_witness(const CayleyGroup& g,
                                                    const SubgroupSet& h) {
  if (!h.parent().same_as(g))
    throw NotASubgroup("subgroup belongs to a different group");
  for (ElementId x : h.members())
    for (ElementId y : g.elements())
      if (!h.contains(g.conj(x, y))) return ElementPair{x, y};
  return std::nullopt;
}

inline bool is_normal(const CayleyGroup& g, const SubgroupSet& h) {
  return !normality_witness(g, h).has_value();
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientMap {
  CayleyGroup source;
  SubgroupSet kernel;
  CayleyGroup quotient;
  std::vector<ElementId> projection;

  ElementId operator()(ElementId x) const { return projection[x.index()]; }
};

// Cosets are numbered by their least-index representative and labelled
// "<rep label>·N". The quotient table is re-validated by build_group.
inline QuotientMap quotient_group(const CayleyGroup& g, const SubgroupSet& n) {
  if (!n.parent().same_as(g))
    throw NotASubgroup("kernel belongs to a different group");
  if (auto w = normality_witness(g, n)) throw NotNormal(w->first.value, w->second.value);

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x : g.elements()) {
    if (coset_of[x.index()] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElementId k : n.members()) coset_of[g.mul(x, k).index()] = id;
  }

  const std::size_t q = reps.size();
  std::vector<std::uint32_t> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = coset_of[g.mul(reps[i], reps[j]).index()];

  std::vector<std::string> labels;
  labels.reserve(q);
  for (ElementId r : reps) labels.push_back(g.label(r) + "·N");

  std::vector<ElementId> gens;
  for (ElementId s : g.generators()) {
    ElementId image{coset_of[s.index()]};
    if (std::find(gens.begin(), gens.end(), image) == gens.end())
      gens.push_back(image);
  }

  std::vector<ElementId> projection;
  projection.reserve(g.order());
  for (std::uint32_t c : coset_of) projection.emplace_back(c);

  return QuotientMap{g, n, build_group(q, std::move(table), std::move(labels),
                                       std::move(gens)),
                     std::move(projection)};
}

// ---------------------------------------------------------------------------
// Products and element sets

// Element (g, h) has index g*|H| + h; labels are "(g,h)".
inline CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ElementId ga{static_cast<std::uint32_t>(x / nb)};
      ElementId gb{static_cast<std::uint32_t>(x % nb)};
      ElementId ha{static_cast<std::uint32_t>(y / nb)};
      ElementId hb{static_cast<std::uint32_t>(y % nb)};
      table[x * n + y] = static_cast<std::uint32_t>(
          a.mul(ga, ha).index() * nb + b.mul(gb, hb).index());
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    labels.push_back("(" + a.label(ElementId{static_cast<std::uint32_t>(x / nb)}) +
                     "," + b.label(ElementId{static_cast<std::uint32_t>(x % nb)}) +
                     ")");
  std::vector<ElementId> gens;
  for (ElementId s : a.generators())
    gens.emplace_back(static_cast<std::uint32_t>(s.index() * nb +
                                                 b.identity().index()));
  for (ElementId s : b.generators())
    gens.emplace_back(static_cast<std::uint32_t>(a.identity().index() * nb +
                                                 s.index()));
  return build_group(n, std::move(table), std::move(labels), std::move(gens));
}

inline ElementSet normalize(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// X·Y = { xy : x in X, y in Y }
inline ElementSet product_set(const CayleyGroup& g, std::span<const ElementId> xs,
                              std::span<const ElementId> ys) {
  ElementSet out;
  out.reserve(xs.size() * ys.size());
  for (ElementId x : xs)
    for (ElementId y : ys) out.push_back(g.mul(x, y));
  return normalize(std::move(out));
}

// G^[2] = { x^2 : x in G }
inline ElementSet squares_set(const CayleyGroup& g) {
  ElementSet out;
  for (ElementId x : g.elements()) out.push_back(g.mul(x, x));
  return normalize(std::move(out));
}

inline std::vector<std::string> labels_of(const CayleyGroup& g,
                                          std::span<const ElementId> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (ElementId x : xs) out.push_back(g.label(x));
  return out;
}

}  // namespace sqcomm

template <>
struct std::hash<sqcomm::ElementId> {
  std::size_t operator()(sqcomm::ElementId x) const noexcept {
    return std::hash<std::uint32_t>{}(x.value);
  }
};

#endif  // SQCOMM_GROUP_HPP_
