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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "glwb/checkers.hpp"
#include "glwb/search.hpp"
#include "glwb/transform.hpp"

using namespace glwb;

namespace {

Proof fixture(const std::string& name) {
  std::ifstream in(std::string(GLWB_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_proof(ss.str());
}

Proof csgl_proof(const char* formula, SearchOrder order = SearchOrder::Layered) {
  SearchConfig cfg;
  cfg.order = order;
  SearchResult r = decide_csgl(parse_formula(formula), cfg);
  REQUIRE(r.outcome == Outcome::Proved);
  return *r.proof;
}

RuleMeta meta(const Label& x, const char* f, std::optional<Label> aux = std::nullopt) {
  RuleMeta m;
  m.label = x;
  m.formula = parse_formula(f);
  m.aux = std::move(aux);
  return m;
}

}  // namespace

TEST_CASE("general identity") {
  Sequent s = parse_labeled("x: ~p |- x: ~p");
  ProofNode n = prove_general_id(Calculus::CSGL, s, parse_formula("~p"), "x");
  CHECK(height(n) == 2);
  CHECK(check_csgl(Proof{Calculus::CSGL, n}).accepted);
  Sequent b = parse_labeled("x: [](p | q) |- x: [](p | q)");
  ProofNode m = prove_general_id(Calculus::CSGL, b, parse_formula("[](p | q)"), "x");
  CHECK(check_csgl(Proof{Calculus::CSGL, m}).accepted);
}

TEST_CASE("invertibility of local rules") {
  Proof lob = csgl_proof("[]([]p->p)->[]p");
  ProofNode inv = apply_inverse(Calculus::CSGL, lob.root, Rule::OrR, meta("x", "[]([]p->p)->[]p"), 0);
  CHECK(print_sequent(inv.conclusion) == "|- x: ~[](~[]p | p), x: []p");
  CHECK(height(inv) <= height(lob.root));
  CHECK(check_csgl(Proof{Calculus::CSGL, inv}).accepted);

  ProofNode id = read_proof("calculus: csgl\n(rule id1 (concl \"x: p, x: ~q |- x: p\") (meta label=x formula=p))\n").root;
  ProofNode negl = apply_inverse(Calculus::CSGL, id, Rule::NegL, meta("x", "~q"), 0);
  CHECK(print_sequent(negl.conclusion) == "x: p |- x: p, x: q");
  CHECK(height(negl) == 0);
}

TEST_CASE("weakening and substitution preserve height") {
  Proof p = fixture("csgl_4l.glp");
  ProofNode w = weaken(Calculus::CSGL, p.root, parse_labeled("x: q |- x: []r"));
  CHECK(height(w) == height(p.root));
  CHECK(check_csgl(Proof{Calculus::CSGL, w}).accepted);
  ProofNode s = substitute(Calculus::CSGL, p.root, "x", "z");
  CHECK(print_sequent(s.conclusion) == "z: []p |- z: [][]p");
  CHECK(check_csgl(Proof{Calculus::CSGL, s}).accepted);
}

TEST_CASE("permuting a local rule below another") {
  Proof p = read_proof(R"(calculus: csgl
(rule orR
  (concl "xRy; y: q |- x: ~p, y: q | r")
  (meta label=y formula="q | r")
  (prems
    (rule negR
      (concl "xRy; y: q |- x: ~p, y: q, y: r")
      (meta label=x formula="~p")
      (prems
        (rule id1
          (concl "xRy; x: p, y: q |- y: q, y: r")
          (meta label=y formula=q))))))
)");
  REQUIRE(check_csgl(p).accepted);
  Proof q = permute_down(p, Address{0});
  CHECK(q.root.rule == Rule::NegR);
  CHECK(q.root.premises.at(0).rule == Rule::OrR);
  CHECK(q.root.conclusion == p.root.conclusion);
  CHECK(check_csgl(q).accepted);
}

TEST_CASE("end-active normalisation") {
  for (const char* s : {"[]([]p->p)->[]p", "[]p -> [][]p", "[](p & q) -> []p & []q"}) {
    Proof p = csgl_proof(s, SearchOrder::LocalLast);
    PassResult r = to_end_active(p);
    CHECK(r.proof.root.conclusion == p.root.conclusion);
    CHECK(check_csgl(r.proof).accepted);
    CHECK(end_active_report(r.proof).accepted);
  }
}

TEST_CASE("linearisation and normalisation") {
  Linearization l = linearize(fixture("id1.glp"));
  CHECK(l.proof.calculus == Calculus::LNGL);
  CHECK(print_sequent(l.proof.root.conclusion) == "p |- p");

  Proof em = csgl_proof("p | ~p");
  Linearization le = linearize(em);
  CHECK(check_lngl(le.proof).accepted);
  PassResult n = normalize_lngl(le.proof);
  CHECK(n.report.steps == 0);
  CHECK(write_proof(n.proof) == write_proof(le.proof));

  Proof lob = to_end_active(csgl_proof("[]([]p->p)->[]p")).proof;
  Linearization ll = linearize(lob);
  CHECK(check_lngl(ll.proof).accepted);
  PassResult nl = normalize_lngl(ll.proof);
  CHECK(check_lngl(nl.proof).accepted);
  CHECK(normal_form_report(nl.proof).accepted);
}

TEST_CASE("translation down to g3gl") {
  for (const char* s : {"[]([]p->p)->[]p", "[]p -> [][]p", "[](p & q) -> []p & []q"}) {
    Proof lngl = normalize_lngl(linearize(to_end_active(csgl_proof(s)).proof).proof).proof;
    PassResult g = lngl_to_glseq(lngl);
    CHECK(g.proof.calculus == Calculus::GLseq);
    CHECK(check_glseq(g.proof).accepted);
    PassResult h = glseq_to_g3gl(g.proof);
    CHECK(check_proof(h.proof, CheckMode::Extended).accepted);
  }
}

TEST_CASE("the pipeline stages all check") {
  std::vector<Stage> stages = pipeline(parse_formula("[]p -> [][]p"));
  REQUIRE(stages.size() == 6);
  for (const Stage& s : stages) CHECK_MESSAGE(check_proof(s.proof, CheckMode::Extended).accepted, s.name);
  CHECK(print_sequent(stages[2].proof.root.conclusion) == "|- ~[]p | [][]p");
}

TEST_CASE("embedding and admissibility") {
  Proof lob = csgl_proof("[]([]p->p)->[]p");
  Proof e = csgl_to_g3gl_embed(lob);
  CHECK(check_proof(e, CheckMode::Extended).accepted);
  Proof a = admit_all(fixture("g3gl_lob_step.glp"));
  CHECK(check_proof(a, CheckMode::Extended).accepted);
  bool admissible_left = false;
  for_each_node(a.root, [&](const ProofNode& n, const Address&) {
    if (n.rule == Rule::Weaken || n.rule == Rule::Subst || n.rule == Rule::ContractL || n.rule == Rule::ContractR)
      admissible_left = true;
  });
  CHECK_FALSE(admissible_left);
}

TEST_CASE("unfolding a cyclic derivation") {
  Proof d = fixture("lob_cyclic.glp");
  REQUIRE(check_glcirc(d).accepted);
  CHECK(node_count(unfold_glcirc(d, 0).root) == 6);
  Proof once = unfold_glcirc(d, 1);
  CHECK(node_count(once.root) == 10);
  CHECK(check_k4seq_prefix(once).accepted);
  CHECK(check_k4seq_prefix(unfold_glcirc(d, 3)).accepted);
}
