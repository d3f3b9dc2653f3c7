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

// Backtracking isomorphism search between small Cayley tables.
//
// The source group is reduced to a short generating set (greedy, largest
// element order first). Images are assigned generator by generator; after
// each assignment the partial map is extended over the subgroup generated so
// far by walking its Cayley graph, which rejects ill-defined or
// non-injective assignments early. Candidates are restricted to elements of
// matching order, and groups whose order profiles differ are rejected
// before any search.

#ifndef SQCOMM_ISOMORPHISM_HPP_
#define SQCOMM_ISOMORPHISM_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "sqcomm/error.hpp"
#include "sqcomm/group.hpp"

namespace sqcomm {

inline constexpr std::size_t kIsomorphismOrderLimit = 512;

struct Isomorphism {
  CayleyGroup source;
  CayleyGroup target;
  std::vector<ElementId> map;

  ElementId operator()(ElementId x) const { return map[x.index()]; }

  // Bijective and multiplicative on every pair.
  bool verify() const {
    if (source.order() != target.order() || map.size() != source.order())
      return false;
    std::vector<bool> hit(target.order(), false);
    for (ElementId m : map) {
      if (!target.contains(m) || hit[m.index()]) return false;
      hit[m.index()] = true;
    }
    for (ElementId x : source.elements())
      for (ElementId y : source.elements())
        if (map[source.mul(x, y).index()] !=
            target.mul(map[x.index()], map[y.index()]))
          return false;
    return true;
  }
};

// Sorted list of element orders.
inline std::vector<std::size_t> order_profile(const CayleyGroup& g) {
  std::vector<std::size_t> p;
  p.reserve(g.order());
  for (ElementId x : g.elements()) p.push_back(g.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

// Greedy generating set, largest element order first (ties by id).
inline std::vector<ElementId> small_generating_set(const CayleyGroup& g) {
  std::vector<ElementId> by_order(g.elements().begin(), g.elements().end());
  std::stable_sort(by_order.begin(), by_order.end(), [&](ElementId a, ElementId b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<ElementId> gens;
  SubgroupSet span = trivial_subgroup(g);
  for (ElementId x : by_order) {
    if (span.size() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
  }
  return gens;
}

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const CayleyGroup& g, const CayleyGroup& h)
      : g_(g), h_(h), gens_(small_generating_set(g)) {}

  std::optional<std::vector<ElementId>> run() {
    images_.assign(gens_.size(), ElementId{});
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  // Builds the map on <gens_[0..k)> from images_; false if inconsistent.
  bool build_partial(std::size_t k) {
    map_.assign(g_.order(), ElementId{kUnset});
    used_.assign(h_.order(), false);
    map_[g_.identity().index()] = h_.identity();
    used_[h_.identity().index()] = true;
    std::vector<ElementId> queue{g_.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ElementId x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        ElementId y = g_.mul(x, gens_[j]);
        ElementId img = h_.mul(map_[x.index()], images_[j]);
        if (map_[y.index()].value == kUnset) {
          if (used_[img.index()]) return false;
          map_[y.index()] = img;
          used_[img.index()] = true;
          queue.push_back(y);
        } else if (map_[y.index()] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == gens_.size()) return build_partial(k);
    const std::size_t want = g_.element_order(gens_[k]);
    for (ElementId cand : h_.elements()) {
      if (h_.element_order(cand) != want) continue;
      images_[k] = cand;
      if (!build_partial(k + 1)) continue;
      if (extend(k + 1)) return true;
    }
    return false;
  }

  const CayleyGroup& g_;
  const CayleyGroup& h_;
  std::vector<ElementId> gens_;
  std::vector<ElementId> images_;
  std::vector<ElementId> map_;
  std::vector<bool> used_;
};

}  // namespace detail

inline std::optional<Isomorphism> are_isomorphic(const CayleyGroup& g,
                                                 const CayleyGroup& h) {
  if (g.order() > kIsomorphismOrderLimit || h.order() > kIsomorphismOrderLimit)
    throw OrderLimitExceeded("isomorphism search is limited to order " +
                             std::to_string(kIsomorphismOrderLimit));
  if (g.order() != h.order()) return std::nullopt;
  if (order_profile(g) != order_profile(h)) return std::nullopt;
  if (center(g).size() != center(h).size()) return std::nullopt;

  auto map = detail::IsoSearch(g, h).run();
  if (!map) return std::nullopt;
  Isomorphism iso{g, h, std::move(*map)};
  if (!iso.verify()) return std::nullopt;
  return iso;
}

}  // namespace sqcomm

#endif  // SQCOMM_ISOMORPHISM_HPP_
