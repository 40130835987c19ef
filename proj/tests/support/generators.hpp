// Copyright 2026 The glwb Authors.
//
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

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "glwb/formula.hpp"

namespace glwb::testing {

// Formulas over {p, q} built from ~, [] and | with exactly n connectives.
// by_size[n] holds all of them, in a fixed order.
inline std::vector<std::vector<Formula>> enumerate_formulas(std::size_t max_connectives) {
  std::vector<std::vector<Formula>> by_size(max_connectives + 1);
  by_size[0] = {Formula::atom("p"), Formula::atom("q")};
  for (std::size_t n = 1; n <= max_connectives; ++n) {
    auto& out = by_size[n];
    for (Formula f : by_size[n - 1]) {
      out.push_back(Formula::negation(f));
      out.push_back(Formula::box(f));
    }
    for (std::size_t i = 0; i <= n - 1; ++i) {
      for (Formula a : by_size[i]) {
        for (Formula b : by_size[n - 1 - i]) out.push_back(Formula::disjunction(a, b));
      }
    }
  }
  return by_size;
}

// A formula with exactly n connectives, drawn by recursive splitting.
inline Formula random_formula(std::mt19937_64& rng, std::size_t n) {
  if (n == 0) return Formula::atom(std::uniform_int_distribution<int>(0, 1)(rng) ? "q" : "p");
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return Formula::negation(random_formula(rng, n - 1));
    case 1:
      return Formula::box(random_formula(rng, n - 1));
    default: {
      std::size_t left = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      return Formula::disjunction(random_formula(rng, left), random_formula(rng, n - 1 - left));
    }
  }
}

}  // namespace glwb::testing
