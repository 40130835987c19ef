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

#include <functional>
#include <map>

#include "doctest.h"
#include "glwb/error.hpp"
#include "glwb/semantics.hpp"
#include "../support/generators.hpp"

using namespace glwb;

namespace {

// Independent evaluator over an adjacency matrix.
struct Frame {
  int n;
  std::vector<std::vector<bool>> rel;
  std::map<std::string, std::vector<bool>> val;
};

bool truth(const Frame& m, int w, Formula f) {
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = m.val.find(std::string(f.name()));
      return it != m.val.end() && it->second[static_cast<std::size_t>(w)];
    }
    case Connective::Not:
      return !truth(m, w, f.sub());
    case Connective::Or:
      return truth(m, w, f.left()) || truth(m, w, f.right());
    case Connective::Box:
      for (int u = 0; u < m.n; ++u) {
        if (m.rel[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] && !truth(m, u, f.sub())) return false;
      }
      return true;
  }
  return false;
}

// Every strict partial order on n worlds.
std::vector<std::vector<std::vector<bool>>> strict_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  std::vector<std::vector<std::vector<bool>>> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) r[static_cast<std::size_t>(pairs[i].first)][static_cast<std::size_t>(pairs[i].second)] = true;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        for (int c = 0; c < n && ok; ++c) {
          auto A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b), C = static_cast<std::size_t>(c);
          if (r[A][B] && r[B][C] && !r[A][C]) ok = false;
          if (r[A][B] && r[B][A]) ok = false;
        }
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

// Brute-force refutation search over all frames with up to `max` worlds.
std::optional<int> smallest_refutation(Formula f, int max) {
  static std::map<int, std::vector<std::vector<std::vector<bool>>>> orders;
  for (int n = 1; n <= max; ++n) {
    if (!orders.count(n)) orders[n] = strict_orders(n);
    for (const auto& r : orders[n]) {
      for (unsigned v = 0; v < (1u << (2 * n)); ++v) {
        Frame m{n, r, {}};
        m.val["p"].resize(static_cast<std::size_t>(n));
        m.val["q"].resize(static_cast<std::size_t>(n));
        for (int w = 0; w < n; ++w) {
          m.val["p"][static_cast<std::size_t>(w)] = v >> w & 1u;
          m.val["q"][static_cast<std::size_t>(w)] = v >> (n + w) & 1u;
        }
        for (int w = 0; w < n; ++w) {
          if (!truth(m, w, f)) return n;
        }
      }
    }
  }
  return std::nullopt;
}

Model chain_model() { return parse_model("worlds: w u\nrel: w<u\nval p: u\n"); }

}  // namespace

TEST_CASE("eval clauses") {
  Model single = parse_model("worlds: w\n");
  CHECK(eval(single, "w", parse_formula("[]q")));
  CHECK(eval(single, "w", parse_formula("[]~q")));
  Model m = chain_model();
  CHECK(eval(m, "w", parse_formula("[]p")));
  CHECK_FALSE(eval(m, "w", parse_formula("p")));
  CHECK_FALSE(eval(m, "w", parse_formula("[]p -> p")));
  CHECK_THROWS_AS(eval(m, "v", parse_formula("p")), Error);
}

TEST_CASE("models are closed transitively and must be irreflexive") {
  Model m = parse_model("worlds: a b c\nrel: a<b; b<c\n");
  CHECK(m.related(m.index_of("a"), m.index_of("c")));
  CHECK_THROWS_AS(parse_model("worlds: a b\nrel: a<b; b<a\n"), Error);
  CHECK_THROWS_AS(parse_model("worlds: a\nrel: a<a\n"), Error);
  CHECK_THROWS_AS(parse_model("worlds: a\nrel: a<z\n"), Error);
  CHECK(print_model(parse_model(print_model(m))) == print_model(m));
}

TEST_CASE("oracle examples") {
  CHECK(oracle_validity(parse_formula("[]([]p->p)->[]p")).valid);
  CHECK(oracle_validity(parse_formula("p | ~p")).valid);
  CHECK(oracle_validity(parse_formula("[]p -> [][]p")).valid);
  OracleVerdict v = oracle_validity(parse_formula("[]p -> p"));
  REQUIRE_FALSE(v.valid);
  REQUIRE(v.countermodel);
  CHECK_FALSE(eval(*v.countermodel, v.world, parse_formula("[]p -> p")));
  // A single world already refutes it: []p holds vacuously, p fails.
  CHECK(v.countermodel->size() == 1);
  CHECK(smallest_refutation(parse_formula("[]p -> p"), 2) == 1);
}

TEST_CASE("bound flag") {
  Formula f = parse_formula("[]([]p->p)->[]p");
  ModelBound b = default_bound(f);
  CHECK(b.max_depth == 3);
  CHECK(b.max_branching == 3);
  CHECK_FALSE(oracle_validity(f).bound_too_small);
  CHECK(oracle_validity(f, ModelBound{1, 1}).bound_too_small);
  // Finding a countermodel at a small bound persists at larger ones.
  Formula g = parse_formula("[][]p -> []p");
  CHECK_FALSE(oracle_validity(g, ModelBound{2, 1}).valid);
  CHECK_FALSE(oracle_validity(g).valid);
}

TEST_CASE("oracle agrees with brute force over small frames") {
  auto by_size = testing::enumerate_formulas(3);
  for (const auto& level : by_size) {
    for (Formula f : level) {
      OracleVerdict v = oracle_validity(f);
      std::optional<int> r = smallest_refutation(f, 4);
      CHECK_MESSAGE(v.valid == !r.has_value(), print_formula(f));
      if (!v.valid && r) {
        CHECK(static_cast<int>(v.countermodel->size()) == *r);
        CHECK_FALSE(eval(*v.countermodel, v.world, f));
      }
    }
  }
}

TEST_CASE("labeled sequent evaluation") {
  Model m = parse_model("worlds: r s\nrel: r<s\n");
  CHECK(eval_labeled_sequent(m, {{"x", "r"}}, parse_labeled("x: p |- x: p")));
  CHECK(eval_labeled_sequent(m, {{"x", "r"}}, parse_labeled("xRx |- ")));
  CHECK_FALSE(eval_labeled_sequent(m, {{"x", "r"}}, parse_labeled("|- x: []p")));
  CHECK(eval_labeled_sequent(m, {{"x", "s"}}, parse_labeled("|- x: []p")));
}

TEST_CASE("formula readings") {
  Formula f = lns_interpretation(parse_lns("|- p"));
  CHECK(oracle_validity(Formula::implication(f, parse_formula("p"))).valid);
  CHECK(oracle_validity(Formula::implication(parse_formula("p"), f)).valid);
  Formula g = lns_interpretation(parse_lns("p |- q // r |- s"));
  CHECK(oracle_validity(Formula::implication(g, parse_formula("p -> q | [](r -> s)"))).valid);
  CHECK(oracle_validity(Formula::implication(parse_formula("p -> q | [](r -> s)"), g)).valid);
  CHECK(oracle_validity(lns_interpretation(parse_lns("|- []([]p->p)->[]p"))).valid);
  CHECK(oracle_validity(tree_interpretation(parse_labeled("xRy; x: []p |- y: p"))).valid);
  CHECK_FALSE(oracle_validity(tree_interpretation(parse_labeled("xRy; y: []p |- x: p"))).valid);
  CHECK(labeled_sequent_valid_bruteforce(parse_labeled("xRy; yRz; x: []p |- z: p"), 3));
  CHECK_FALSE(labeled_sequent_valid_bruteforce(parse_labeled("xRy; yRz; z: []p |- x: p"), 3));
}
