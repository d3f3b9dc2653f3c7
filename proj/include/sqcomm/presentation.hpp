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

// Free-group words and group presentations.
//
// Accepted syntax (whitespace between tokens is optional):
//
//   presentation := ("<" | "⟨") genlist "|" [relation ("," relation)*] (">" | "⟩")
//   genlist      := name ("," name)*
//   relation     := word ("=" word)*
//   word         := factor+
//   factor       := ("1" | "e" | name | "(" word ")") ["^" integer]
//   name         := [A-Za-z][A-Za-z0-9]*
//
// A chained relation u1 = u2 = ... = uk becomes the relators
// u1 uk^-1, ..., u(k-1) uk^-1, so "a^4 = b^2 = 1" yields a^4 and b^2.
// A name that is not a declared generator is split greedily into declared
// names when possible, which lets "aba" stand for "a b a".

#ifndef SQCOMM_PRESENTATION_HPP_
#define SQCOMM_PRESENTATION_HPP_

#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqcomm/error.hpp"
#include "sqcomm/group.hpp"

namespace sqcomm {

struct Syllable {
  std::size_t generator = 0;
  long long exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced by construction when produced through reduce_word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  std::span<const Syllable> syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& s : syllables_) n += static_cast<std::size_t>(std::llabs(s.exponent));
    return n;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// Merges adjacent syllables on the same generator and drops zero exponents,
// repeated until nothing changes (a single stack pass reaches the fixpoint).
inline std::vector<Syllable> reduce_syllables(std::span<const Syllable> in) {
  std::vector<Syllable> out;
  for (const Syllable& s : in) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

inline Word::Word(std::vector<Syllable> syllables)
    : syllables_(reduce_syllables(syllables)) {}

inline Word reduce_word(const Word& w) {
  return Word(std::vector<Syllable>(w.syllables().begin(), w.syllables().end()));
}

inline Word word_inverse(const Word& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return Word(std::move(out));
}

inline Word word_concat(const Word& u, const Word& v) {
  std::vector<Syllable> out(u.syllables().begin(), u.syllables().end());
  out.insert(out.end(), v.syllables().begin(), v.syllables().end());
  return Word(std::move(out));
}

inline Word word_power(const Word& w, long long k) {
  if (w.syllables().size() == 1) {
    Syllable s = w.syllables()[0];
    s.exponent *= k;
    return Word({s});
  }
  const Word base = k < 0 ? word_inverse(w) : w;
  const long long n = k < 0 ? -k : k;
  std::vector<Syllable> out;
  for (long long i = 0; i < n; ++i)
    out.insert(out.end(), base.syllables().begin(), base.syllables().end());
  return Word(std::move(out));
}

// Left-to-right product of pow(image, exponent). Throws std::out_of_range
// when a syllable references a generator outside the assignment.
inline ElementId evaluate_word(const CayleyGroup& g,
                               std::span<const ElementId> assignment,
                               const Word& w) {
  ElementId acc = g.identity();
  for (const Syllable& s : w.syllables()) {
    if (s.generator >= assignment.size())
      throw std::out_of_range("word uses generator " + std::to_string(s.generator) +
                              " but only " + std::to_string(assignment.size()) +
                              " are assigned");
    acc = g.mul(acc, g.pow(assignment[s.generator], s.exponent));
  }
  return acc;
}

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// "a^2 b^-1" with spaces between syllables; "1" for the empty word.
inline std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += names[s.generator];
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

// "a^2b^-1"; "e" for the empty word. Used for element labels.
inline std::string compact_word(const Word& w, std::span<const std::string> names,
                                std::string_view separator = "") {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += separator;
    out += names[s.generator];
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

// Canonical form: relators only, ASCII brackets.
inline std::string format_presentation(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += format_word(p.relators[i], p.generators);
  }
  out += " >";
  return out;
}

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    skip_ws();
    if (!eat_open()) throw SyntaxError(pos_, "'<'");
    skip_ws();
    if (peek_is('|')) throw EmptyGeneratorList();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      auto name = read_name();
      if (!name) throw SyntaxError(pos_, "generator name");
      if (*name == "e")
        throw SyntaxError(at, "generator name other than reserved 'e'");
      for (const auto& g : p.generators)
        if (g == *name) throw SyntaxError(at, "distinct generator name");
      p.generators.push_back(*name);
      skip_ws();
      if (peek_is(',')) {
        ++pos_;
        continue;
      }
      if (peek_is('|')) {
        ++pos_;
        break;
      }
      throw SyntaxError(pos_, "',' or '|'");
    }
    names_ = p.generators;

    skip_ws();
    if (eat_close()) {
      finish();
      return p;
    }
    for (;;) {
      std::vector<Word> chain{parse_word()};
      skip_ws();
      while (peek_is('=')) {
        ++pos_;
        chain.push_back(parse_word());
        skip_ws();
      }
      const Word& last = chain.back();
      if (chain.size() == 1) {
        if (!last.empty()) p.relators.push_back(last);
      } else {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          Word r = word_concat(chain[i], word_inverse(last));
          if (!r.empty()) p.relators.push_back(std::move(r));
        }
      }
      skip_ws();
      if (peek_is(',')) {
        ++pos_;
        continue;
      }
      if (eat_close()) break;
      throw SyntaxError(pos_, "',', '=' or '>'");
    }
    finish();
    return p;
  }

 private:
  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool eat_literal(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  bool eat_open() { return eat_literal("<") || eat_literal("⟨"); }
  bool eat_close() { return eat_literal(">") || eat_literal("⟩"); }

  std::optional<std::string> read_name() {
    if (pos_ >= text_.size() ||
        !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      return std::nullopt;
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long long read_integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek_is('-') || peek_is('+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, "integer exponent");
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<long long>::max() - 9) / 10)
        throw SyntaxError(start, "exponent within range");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -v : v;
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  // Greedy longest-match split of an undeclared token into declared names.
  std::optional<std::vector<std::size_t>> split_name(std::string_view token) const {
    std::vector<std::size_t> out;
    std::size_t at = 0;
    while (at < token.size()) {
      std::optional<std::size_t> best;
      std::size_t best_len = 0;
      for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto& n = names_[i];
        if (n.size() > best_len && token.substr(at, n.size()) == n) {
          best = i;
          best_len = n.size();
        }
      }
      if (!best) return std::nullopt;
      out.push_back(*best);
      at += best_len;
    }
    return out;
  }

  bool at_factor_start() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  Word parse_factor() {
    skip_ws();
    Word base;
    const std::size_t at = pos_;
    if (peek_is('(')) {
      ++pos_;
      base = parse_word();
      skip_ws();
      if (!peek_is(')')) throw SyntaxError(pos_, "')'");
      ++pos_;
    } else if (peek_is('1')) {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError(at, "'1' or a generator name");
    } else if (auto name = read_name()) {
      if (*name != "e") {
        if (auto idx = index_of(*name)) {
          base = Word({Syllable{*idx, 1}});
        } else if (auto parts = split_name(*name)) {
          std::vector<Syllable> syl;
          for (std::size_t i : *parts) syl.push_back(Syllable{i, 1});
          base = Word(std::move(syl));
        } else {
          throw UnknownGenerator(*name, at);
        }
      }
    } else {
      throw SyntaxError(pos_, "generator name, '1', 'e' or '('");
    }
    skip_ws();
    if (peek_is('^')) {
      ++pos_;
      base = word_power(base, read_integer());
    }
    return base;
  }

  Word parse_word() {
    skip_ws();
    if (!at_factor_start())
      throw SyntaxError(pos_, "generator name, '1', 'e' or '('");
    Word w;
    while (true) {
      skip_ws();
      if (!at_factor_start()) break;
      w = word_concat(w, parse_factor());
    }
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

inline bool looks_like_presentation(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return text.substr(i, 1) == "<" || text.substr(i, 3) == "⟨";
}

}  // namespace sqcomm

#endif  // SQCOMM_PRESENTATION_HPP_
