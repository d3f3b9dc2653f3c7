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

// Lists every group of order below 12 with its hat-group order and verdict.

#include <iomanip>
#include <iostream>

#include "sqcomm/catalog.hpp"
#include "sqcomm/sqcomm.hpp"

int main() {
  for (const sqcomm::CatalogEntry& e : sqcomm::small_groups_under_12()) {
    const sqcomm::PairVerdict v = sqcomm::is_square_commutative(e.group);
    std::cout << std::left << std::setw(6) << e.name << std::right << std::setw(4)
              << e.group.order() << std::setw(4) << sqcomm::hat_group(e.group).quotient.order();
    if (v) {
      std::cout << "  yes\n";
    } else {
      const auto [x, y] = *v.witness;
      std::cout << "  no  (" << e.group.label(x) << ", " << e.group.label(y) << ")\n";
    }
  }
}
