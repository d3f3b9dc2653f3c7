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

#ifndef SQCOMM_ERROR_HPP_
#define SQCOMM_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqcomm {

// Root of every exception thrown by the library. Callers that only need a
// diagnostic can catch this; the subclasses carry structured witnesses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// group-core

class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::vector<std::uint32_t> witness)
      : Error(Describe(axiom, witness)),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  // One of "shape", "closure", "associativity", "identity", "inverse".
  const std::string& axiom() const { return axiom_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  static std::string Describe(const std::string& axiom,
                              const std::vector<std::uint32_t>& w) {
    std::string s = "not a group: " + axiom + " fails";
    if (!w.empty()) {
      s += " at (";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(w[i]);
      }
      s += ")";
    }
    return s;
  }

  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

class BadLabels : public Error {
 public:
  using Error::Error;
};

class GeneratorsDoNotGenerate : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  // conj(h, g) = g^-1 h g left the subgroup.
  NotNormal(std::uint32_t h, std::uint32_t g)
      : Error("subgroup is not normal: conjugate of element " +
              std::to_string(h) + " by " + std::to_string(g) +
              " leaves it"),
        h_(h),
        g_(g) {}

  std::uint32_t member() const { return h_; }
  std::uint32_t conjugator() const { return g_; }

 private:
  std::uint32_t h_;
  std::uint32_t g_;
};

class OrderLimitExceeded : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// presentation

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownGenerator : public Error {
 public:
  UnknownGenerator(std::string name, std::size_t position)
      : Error("unknown generator '" + name + "' at position " +
              std::to_string(position)),
        name_(std::move(name)),
        position_(position) {}

  const std::string& name() const { return name_; }
  std::size_t position() const { return position_; }

 private:
  std::string name_;
  std::size_t position_;
};

class EmptyGeneratorList : public Error {
 public:
  EmptyGeneratorList() : Error("presentation has no generators") {}
};

class CosetLimitExceeded : public Error {
 public:
  explicit CosetLimitExceeded(std::size_t limit)
      : Error("coset enumeration exceeded " + std::to_string(limit) +
              " cosets (group may be infinite or larger than the limit)"),
        limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

// ---------------------------------------------------------------------------
// sqcomm / catalog

class NotGenerating : public Error {
 public:
  using Error::Error;
};

class TooFewGenerators : public Error {
 public:
  using Error::Error;
};

class GeneratorListTooLong : public Error {
 public:
  using Error::Error;
};

class NoDecomposition : public Error {
 public:
  using Error::Error;
};

class NotSquareCommutative : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// io

// Malformed Cayley dump or report document.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqcomm

#endif  // SQCOMM_ERROR_HPP_
