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

// Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy).
//
// Cosets are processed in definition order. For each live coset every
// relator is scanned and filled, then any still-undefined entries of its row
// are defined, so the table is complete when the sweep ends. Coincidences
// are processed with a queue; the larger coset index is always merged into
// the smaller. The finished table is turned into a CayleyGroup by closing
// the generator permutations under composition.

#ifndef SQCOMM_TODD_COXETER_HPP_
#define SQCOMM_TODD_COXETER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqcomm/error.hpp"
#include "sqcomm/group.hpp"
#include "sqcomm/presentation.hpp"

namespace sqcomm {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

struct Realization {
  CayleyGroup group;
  std::vector<ElementId> assignment;  // image of each presentation generator
};

// Complete coset table: row c, column 2i is c·g_i and 2i+1 is c·g_i^-1.
struct CosetTable {
  std::size_t num_generators = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  std::size_t size() const { return rows.size(); }
};

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t max_cosets)
      : cols_(2 * p.generators.size()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      std::vector<std::size_t> letters;
      for (const Syllable& s : r.syllables()) {
        const std::size_t col = 2 * s.generator + (s.exponent < 0 ? 1 : 0);
        const long long n = s.exponent < 0 ? -s.exponent : s.exponent;
        for (long long i = 0; i < n; ++i) letters.push_back(col);
      }
      relators_.push_back(std::move(letters));
    }
  }

  CosetTable run() {
    new_coset();
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      for (std::size_t x = 0; x < cols_ && live(c); ++x)
        if (table_[c][x] == kUndef) define(c, x);
    }
    return compact();
  }

 private:
  static constexpr std::size_t kUndef = ~std::size_t{0};

  static std::size_t inverse_col(std::size_t x) { return x ^ 1; }

  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t new_coset() {
    if (table_.size() >= max_cosets_) throw CosetLimitExceeded(max_cosets_);
    table_.emplace_back(cols_, kUndef);
    parent_.push_back(table_.size() - 1);
    return table_.size() - 1;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = new_coset();
    table_[c][x] = d;
    table_[d][inverse_col(x)] = c;
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    for (;;) {
      while (i < j && table_[f][w[i]] != kUndef) f = table_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][inverse_col(w[j - 1])] != kUndef)
        b = table_[b][inverse_col(w[--j])];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][inverse_col(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const std::size_t next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t e = queue[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t f = table_[e][x];
        if (f == kUndef) continue;
        table_[f][inverse_col(x)] = kUndef;
        const std::size_t e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] != kUndef) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][inverse_col(x)] != kUndef) {
          merge(e1, table_[f1][inverse_col(x)], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][inverse_col(x)] = e1;
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<std::size_t> renumber(table_.size(), kUndef);
    std::size_t n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) renumber[c] = n++;
    CosetTable out;
    out.num_generators = cols_ / 2;
    out.rows.reserve(n);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<std::uint32_t> row(cols_);
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t t = table_[c][x];
        if (t == kUndef) throw Error("coset enumeration left an incomplete row");
        row[x] = static_cast<std::uint32_t>(renumber[rep(t)]);
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace detail

inline CosetTable enumerate_cosets(const Presentation& p,
                                   std::size_t max_cosets = kDefaultMaxCosets) {
  if (p.generators.empty()) throw EmptyGeneratorList();
  if (max_cosets == 0) throw BadParameter("max_cosets must be at least 1");
  return detail::CosetEnumerator(p, max_cosets).run();
}

// Realizes a finite presented group as a Cayley table. Elements are the
// closure of the generator permutations under composition, found by
// breadth-first search from the identity over positive generators; each is
// labelled by its first-found (shortest) word.
inline Realization todd_coxeter(const Presentation& p,
                                std::size_t max_cosets = kDefaultMaxCosets) {
  const CosetTable t = enumerate_cosets(p, max_cosets);
  const std::size_t degree = t.size();
  const std::size_t k = p.generators.size();

  using Perm = std::vector<std::uint32_t>;
  std::vector<Perm> gen_perms(k, Perm(degree));
  for (std::size_t c = 0; c < degree; ++c)
    for (std::size_t i = 0; i < k; ++i) gen_perms[i][c] = t.rows[c][2 * i];

  Perm identity(degree);
  for (std::size_t c = 0; c < degree; ++c) identity[c] = static_cast<std::uint32_t>(c);

  std::map<Perm, std::uint32_t> index;
  std::vector<Perm> elements{identity};
  std::vector<Word> words{Word()};
  index.emplace(identity, 0);
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (std::size_t i = 0; i < k; ++i) {
      // Apply elements[e] first, then generator i.
      Perm next(degree);
      for (std::size_t c = 0; c < degree; ++c)
        next[c] = gen_perms[i][elements[e][c]];
      if (index.contains(next)) continue;
      index.emplace(next, static_cast<std::uint32_t>(elements.size()));
      elements.push_back(std::move(next));
      words.push_back(word_concat(words[e], Word({Syllable{i, 1}})));
    }

  const std::size_t n = elements.size();
  // Elements are determined by the image of coset 0 when that image is
  // injective on the closure; check it before using it as a lookup key.
  std::vector<std::uint32_t> by_image(degree, ~std::uint32_t{0});
  bool regular = true;
  for (std::size_t e = 0; e < n && regular; ++e) {
    auto& slot = by_image[elements[e][0]];
    if (slot != ~std::uint32_t{0}) regular = false;
    slot = static_cast<std::uint32_t>(e);
  }

  std::vector<std::uint32_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (regular) {
        table[x * n + y] = by_image[elements[y][elements[x][0]]];
      } else {
        Perm prod(degree);
        for (std::size_t c = 0; c < degree; ++c) prod[c] = elements[y][elements[x][c]];
        table[x * n + y] = index.at(prod);
      }
    }

  std::vector<std::string> labels;
  labels.reserve(n);
  // Multi-letter generator names would make juxtaposed labels ambiguous.
  bool single_letters = true;
  for (const auto& name : p.generators) single_letters &= name.size() == 1;
  for (const Word& w : words)
    labels.push_back(compact_word(w, p.generators, single_letters ? "" : "*"));

  std::vector<ElementId> assignment;
  for (std::size_t i = 0; i < k; ++i) assignment.emplace_back(index.at(gen_perms[i]));

  return Realization{build_group(n, std::move(table), std::move(labels), assignment),
                     assignment};
}

inline Realization todd_coxeter(std::string_view presentation_text,
                                std::size_t max_cosets = kDefaultMaxCosets) {
  return todd_coxeter(parse_presentation(presentation_text), max_cosets);
}

}  // namespace sqcomm

#endif  // SQCOMM_TODD_COXETER_HPP_
