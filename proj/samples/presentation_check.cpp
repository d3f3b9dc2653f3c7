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

// Enumerates a presentation and prints the two-generator relations.
//
//   sample_presentation_check "< a, b | a^4 = b^3 = 1, b a = a b^2, b a^2 = a^2 b >"

#include <iostream>

#include "sqcomm/sqcomm.hpp"
#include "sqcomm/todd_coxeter.hpp"

int main(int argc, char** argv) {
  const char* text = argc > 1 ? argv[1] : "< a, b | a^4 = b^2 = 1, b a = (a b)^3, b a^2 = a^2 b >";
  try {
    const sqcomm::Realization r = sqcomm::todd_coxeter(text);
    std::cout << "order " << r.group.order() << '\n';
    if (r.assignment.size() != 2) {
      std::cout << "not a two-generator presentation\n";
      return 0;
    }
    const auto c = sqcomm::two_generator_criterion(r.group, r.assignment[0], r.assignment[1]);
    for (const auto& rel : c.relations)
      std::cout << "  " << rel.name << ": " << (rel.holds ? "holds" : "fails") << '\n';
    std::cout << "square commutative: " << (c.overall ? "yes" : "no") << '\n';
  } catch (const sqcomm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
