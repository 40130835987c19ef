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

#include "doctest.h"
#include "glwb/error.hpp"
#include "glwb/proof.hpp"
#include "glwb/sequent.hpp"

using namespace glwb;

TEST_CASE("sequent syntax round trips") {
  for (const char* s : {"p, q |- r", "|- p", "p |-", "|-", "[]p, []p |- ~q"}) {
    CHECK(print_gentzen(parse_gentzen(print_gentzen(parse_gentzen(s)))) == print_gentzen(parse_gentzen(s)));
  }
  LabeledSequent l = parse_labeled("xRy; xRz; x: p, y: q |- z: r");
  CHECK(print_labeled(l) == "xRy; xRz; x: p, y: q |- z: r");
  CHECK(parse_labeled(print_labeled(l)) == l);
  CHECK(parse_labeled("xRy, x: p |- y: q") == parse_labeled("xRy; x: p |- y: q"));
  LinearNestedSequent n = parse_lns("p |- // q |- r");
  CHECK(n.length() == 2);
  CHECK(print_lns(n) == "p |- // q |- r");
  CHECK(print_gentzen(n.end()) == "q |- r");
  CHECK_THROWS_AS(parse_gentzen("p, |- q"), SyntaxError);
}

TEST_CASE("multisets keep multiplicity in a canonical order") {
  GentzenSequent a = parse_gentzen("q, p, q |- ");
  GentzenSequent b = parse_gentzen("q, q, p |- ");
  CHECK(a == b);
  CHECK(ms_count(a.antecedent, Formula::atom("q")) == 2);
}

TEST_CASE("tree roots and diagnoses") {
  CHECK(tree_root(parse_labeled("xRy; x: p |- y: q")) == "x");
  CHECK(tree_root(parse_labeled("x: p |- x: q")) == "x");
  CHECK(diagnose_tree(parse_labeled("xRy; yRx |- ")) == TreeDiagnosis::Cycle);
  CHECK(diagnose_tree(parse_labeled("xRx |- ")) == TreeDiagnosis::Cycle);
  CHECK(diagnose_tree(parse_labeled("xRz; yRz |- ")) == TreeDiagnosis::MultiRoot);
  CHECK(diagnose_tree(parse_labeled("xRy; xRz; yRw; zRw |- ")) == TreeDiagnosis::Cycle);
  CHECK(diagnose_tree(parse_labeled("xRy; zRw |- ")) == TreeDiagnosis::Disconnected);
  CHECK(diagnose_tree(parse_labeled("x: p |- y: p")) == TreeDiagnosis::Disconnected);
  CHECK(diagnose_tree(parse_labeled("xRy; z: p |- ")) == TreeDiagnosis::DanglingLabel);
  try {
    tree_root(parse_labeled("xRy; yRx |- "));
    FAIL("expected NotATree");
  } catch (const Error& e) {
    CHECK(e.code() == "NotATree");
    CHECK(std::string(e.what()) == "cycle");
  }
}

TEST_CASE("leaves, pre-leaves and paths") {
  LabeledSequent t = parse_labeled("xRy; xRz; yRw; x: p |- w: q");
  CHECK(is_leaf(t, "z"));
  CHECK(is_leaf(t, "w"));
  CHECK_FALSE(is_leaf(t, "y"));
  CHECK(is_pre_leaf(t, "y"));
  CHECK_FALSE(is_pre_leaf(t, "x"));
  CHECK(path_to(t, "w") == std::vector<Label>{"x", "y", "w"});
  CHECK(tree_parent(t, "w") == std::optional<Label>("y"));
  CHECK_FALSE(tree_parent(t, "x"));
}

TEST_CASE("path projection") {
  std::vector<Label> x{"x"}, xy{"x", "y"};
  CHECK(print_lns(path_projection(parse_labeled("x: p |- x: q"), x)) == "p |- q");
  CHECK(print_lns(path_projection(parse_labeled("xRy; x: p, y: q |- y: r"), xy)) == "p |- // q |- r");
  CHECK(print_lns(path_projection(parse_labeled("xRy; xRz; x: p |- z: q"), xy)) == "p |- // |-");
  std::vector<Label> bad{"y"};
  CHECK_THROWS_AS(path_projection(parse_labeled("xRy |- "), bad), Error);
  CHECK(path_projection(parse_labeled("xRy; yRz |- "), std::vector<Label>{"x", "y", "z"}).length() == 3);
}

TEST_CASE("tree views") {
  CHECK(tree_view(parse_labeled("x: p |- x: q")).children.empty());
  TreeView two = tree_view(parse_labeled("xRy |- "));
  REQUIRE(two.children.size() == 1);
  CHECK(two.children[0].label == "y");
  TreeView three = tree_view(parse_labeled("xRy; xRz; x: p |- z: q"));
  CHECK(three.label == "x");
  REQUIRE(three.children.size() == 2);
  CHECK(three.children[0].label == "y");
  CHECK(three.children[1].label == "z");
  CHECK(print_gentzen(three.children[1].flat) == "|- q");
}

TEST_CASE("proof files round trip") {
  const char* text = R"(calculus: csgl
; comment
(rule boxR
  (concl "x: []p |- x: [][]p")
  (meta label=x formula="[][]p" aux=y)
  (prems
    (rule 4L
      (concl "xRy; x: []p, y: [][]p |- y: []p")
      (meta label=x formula="[]p" aux=y)
      (prems
        (rule id2
          (concl "xRy; x: []p, y: []p, y: [][]p |- y: []p")
          (meta label=y formula="[]p"))))))
)";
  Proof p = read_proof(text);
  CHECK(p.calculus == Calculus::CSGL);
  CHECK(node_count(p.root) == 3);
  CHECK(height(p.root) == 2);
  CHECK(write_proof(read_proof(write_proof(p))) == write_proof(p));
  CHECK(node_at(p.root, parse_address("0/0")).rule == Rule::Id2);
  CHECK(print_address(parse_address("0/1/2")) == "0/1/2");
  CHECK_THROWS_AS(read_proof("calculus: nope\n(rule id1 (concl \"x: p |- x: p\"))"), Error);
  CHECK_THROWS_AS(read_proof("calculus: csgl\n(rule id1 (concl \"x: p |- x: p\")"), Error);
  CHECK_THROWS_AS(read_proof("calculus: csgl\n(rule bogus (concl \"x: p |- x: p\"))"), Error);
}
