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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/generators.hpp"
#include "glwb/checkers.hpp"
#include "glwb/error.hpp"
#include "glwb/rules.hpp"
#include "glwb/search.hpp"
#include "glwb/semantics.hpp"
#include "glwb/transform.hpp"

#ifndef GLWB_FIXTURE_DIR
#define GLWB_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

using namespace glwb;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

// Every proof accepted along the way; criterion 6 audits them.
std::vector<Proof> accepted_proofs;

SearchConfig quiet(SearchOrder order = SearchOrder::Layered) {
  SearchConfig cfg;
  cfg.oracle_hint = false;
  cfg.order = order;
  return cfg;
}

Formula boxed(Formula f, int k) {
  for (int i = 0; i < k; ++i) f = Formula::box(f);
  return f;
}

std::vector<Formula> pipeline_corpus() {
  std::vector<Formula> base{
      parse_formula("[]([]p->p)->[]p"), parse_formula("[](p->q)->([]p->[]q)"), parse_formula("[]p->[][]p"),
      parse_formula("p|~p"), parse_formula("[](p|~p)")};
  std::vector<Formula> out = base;
  for (int k = 1; k <= 3; ++k) {
    for (Formula f : base) out.push_back(boxed(f, k));
  }
  return out;
}

Verdict criterion1() {
  Verdict o;
  auto t0 = Clock::now();
  std::size_t ok = 0;
  auto corpus = pipeline_corpus();
  for (Formula f : corpus) {
    try {
      auto stages = pipeline(f);
      static const std::vector<std::string> names{"csgl", "end-active", "lngl", "normal", "glseq", "g3gl"};
      bool good = stages.size() == names.size();
      for (std::size_t i = 0; good && i < stages.size(); ++i) {
        good = stages[i].name == names[i] && check_proof(stages[i].proof, CheckMode::Extended).accepted;
      }
      const Proof& last = stages.back().proof;
      good = good && last.calculus == Calculus::G3GLext &&
             print_sequent(last.root.conclusion) == "|- x: " + print_formula(f);
      if (good) {
        ++ok;
        for (const auto& s : stages) accepted_proofs.push_back(s.proof);
      } else {
        o.fail("stage rejected or wrong conclusion for " + print_formula(f));
      }
    } catch (const Error& e) {
      o.fail(print_formula(f) + ": " + e.code() + " " + e.what());
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 10.0) o.fail("runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << ok << "/" << corpus.size() << " formulas through six checked stages in " << secs << " s";
  o.summary = s.str();
  return o;
}

Verdict criterion2() {
  Verdict o;
  auto t0 = Clock::now();
  auto by_size = testing::enumerate_formulas(6);
  std::vector<Formula> all;
  for (const auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
    all.push_back(testing::random_formula(rng, n));
  }
  std::size_t disagreements = 0, valid = 0;
  SearchConfig cfg = quiet();
  for (Formula f : all) {
    SearchResult g = decide_glseq(f, cfg);
    SearchResult c = decide_csgl(f, cfg);
    OracleVerdict v = oracle_validity(f);
    bool gp = g.outcome == Outcome::Proved, cp = c.outcome == Outcome::Proved;
    bool settled = g.outcome != Outcome::FuelExhausted && c.outcome != Outcome::FuelExhausted;
    if (!settled || gp != cp || gp != v.valid) {
      ++disagreements;
      o.fail(print_formula(f) + ": glseq " + outcome_name(g.outcome) + ", csgl " + outcome_name(c.outcome) +
             ", oracle " + (v.valid ? "valid" : "invalid"));
    }
    valid += v.valid;
  }
  double secs = seconds_since(t0);
  if (secs >= 300.0) o.fail("runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << all.size() << " formulas (" << valid << " valid), " << disagreements << " disagreements in " << secs << " s";
  o.summary = s.str();
  return o;
}

// Valid formulas spread over sizes, for proof corpora.
std::vector<Formula> valid_sample(std::size_t count) {
  auto by_size = testing::enumerate_formulas(5);
  std::vector<Formula> out;
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 5 && out.size() < count; ++n) {
    std::vector<Formula> pool;
    for (Formula f : by_size[n]) {
      if (oracle_validity(f).valid) pool.push_back(f);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t take = std::min(pool.size(), n == 5 ? count - out.size() : count / 4);
    out.insert(out.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

std::vector<Proof> search_corpus;  // CSGL proofs shared by criteria 3 to 5

struct Candidate {
  Rule rule;
  RuleMeta meta;
};

// Non-initial rule instances whose principal formula occurs in `s`.
std::vector<Candidate> candidates(const LabeledSequent& s) {
  std::vector<Candidate> out;
  std::set<Label> used;
  for (const Label& l : s.labels()) used.insert(l);
  auto meta = [](const Label& x, Formula f) {
    RuleMeta m;
    m.label = x;
    m.formula = f;
    return m;
  };
  for (const auto& lf : s.antecedent) {
    if (lf.formula.is_not()) out.push_back({Rule::NegL, meta(lf.label, lf.formula)});
    if (lf.formula.is_or()) out.push_back({Rule::OrL, meta(lf.label, lf.formula)});
    if (lf.formula.is_box()) {
      for (const auto& [a, b] : s.relations) {
        if (a != lf.label) continue;
        RuleMeta m = meta(lf.label, lf.formula);
        m.aux = b;
        out.push_back({Rule::BoxL, m});
        out.push_back({Rule::FourL, m});
      }
    }
  }
  for (const auto& lf : s.consequent) {
    if (lf.formula.is_not()) out.push_back({Rule::NegR, meta(lf.label, lf.formula)});
    if (lf.formula.is_or()) out.push_back({Rule::OrR, meta(lf.label, lf.formula)});
    if (lf.formula.is_box()) {
      RuleMeta m = meta(lf.label, lf.formula);
      Label fresh = "f0";
      for (int i = 1; used.count(fresh); ++i) fresh = "f" + std::to_string(i);
      m.aux = fresh;
      out.push_back({Rule::BoxR, m});
    }
  }
  return out;
}

Verdict criterion3() {
  Verdict o;
  auto t0 = Clock::now();
  for (Formula f : valid_sample(200)) {
    SearchResult r = decide_csgl(f, quiet());
    if (r.proof) search_corpus.push_back(*r.proof);
  }
  std::size_t checked = 0, violations = 0, box_r_violations = 0;
  std::map<std::string, std::size_t> by_rule;
  for (const Proof& p : search_corpus) {
    // Weakening at the root.
    LabeledSequent extra;
    Label x = tree_root(p.root.labeled());
    extra.antecedent.push_back({x, parse_formula("q")});
    extra.consequent.push_back({x, parse_formula("[]r")});
    ProofNode w = weaken(Calculus::CSGL, p.root, extra);
    Proof wp{Calculus::CSGL, w};
    ++checked;
    ++by_rule["w"];
    LabeledSequent expect = p.root.labeled();
    for (const auto& lf : extra.antecedent) ms_insert(expect.antecedent, lf);
    for (const auto& lf : extra.consequent) ms_insert(expect.consequent, lf);
    if (height(w) > height(p.root) || !check_csgl(wp).accepted || !(w.labeled() == expect)) {
      ++violations;
      o.fail("weakening of |- " + print_sequent(p.root.conclusion));
    } else {
      accepted_proofs.push_back(wp);
    }
    // Inverses at every node.
    for_each_node(p.root, [&](const ProofNode& n, const Address&) {
      for (const Candidate& c : candidates(n.labeled())) {
        std::vector<Sequent> prems;
        try {
          prems = expand(Calculus::CSGL, c.rule, c.meta, n.conclusion);
        } catch (const Error&) {
          continue;
        }
        for (std::size_t i = 0; i < prems.size(); ++i) {
          ++checked;
          ++by_rule[rule_name(c.rule)];
          try {
            ProofNode inv = apply_inverse(Calculus::CSGL, n, c.rule, c.meta, i);
            Proof ip{Calculus::CSGL, inv};
            bool good = inv.conclusion == prems[i] && check_csgl(ip).accepted;
            bool hp = height(inv) <= height(n);
            if (good && hp) continue;
            ++violations;
            if (c.rule == Rule::BoxR && good) ++box_r_violations;
            o.fail(std::string(rule_name(c.rule)) + " inverse on " + print_sequent(n.conclusion) +
                   (good ? ": height " + std::to_string(height(n)) + " -> " + std::to_string(height(inv))
                         : ": invalid output"));
          } catch (const Error& e) {
            ++violations;
            o.fail(std::string(rule_name(c.rule)) + " inverse threw " + e.code() + ": " + e.what());
          }
        }
      }
    });
  }
  std::ostringstream s;
  s << search_corpus.size() << " proofs, " << checked << " outputs (";
  bool first = true;
  for (const auto& [k, v] : by_rule) {
    s << (first ? "" : ", ") << k << " " << v;
    first = false;
  }
  s << "), " << violations << " violations";
  if (violations) s << " (" << box_r_violations << " are boxR height increases over id2)";
  s << " in " << seconds_since(t0) << " s";
  o.summary = s.str();
  return o;
}

std::vector<Proof> end_active_outputs;

Verdict criterion4() {
  Verdict o;
  auto t0 = Clock::now();
  std::vector<Proof> corpus = search_corpus;
  for (Formula f : pipeline_corpus()) {
    SearchResult r = decide_csgl(f, quiet());
    if (r.proof) corpus.push_back(*r.proof);
  }
  std::size_t layered = corpus.size();
  for (std::size_t i = 0; i < layered; ++i) {
    // The same conclusions searched label by label, which yields proofs
    // that are generally not end-active.
    Formula f = parse_formula(print_sequent(corpus[i].root.conclusion).substr(6));
    SearchResult r = decide_csgl(f, quiet(SearchOrder::LocalLast));
    if (r.proof) corpus.push_back(*r.proof);
  }
  std::size_t ok = 0, was_end_active = 0;
  for (const Proof& p : corpus) {
    if (end_active_report(p).accepted) ++was_end_active;
    try {
      PassResult r = to_end_active(p);
      bool good = end_active_report(r.proof).accepted && check_csgl(r.proof).accepted &&
                  print_sequent(r.proof.root.conclusion) == print_sequent(p.root.conclusion);
      if (good) {
        ++ok;
        end_active_outputs.push_back(r.proof);
        accepted_proofs.push_back(r.proof);
      } else {
        o.fail("bad output for " + print_sequent(p.root.conclusion));
      }
    } catch (const Error& e) {
      o.fail(print_sequent(p.root.conclusion) + ": " + e.code() + " " + e.what());
    }
  }
  std::ostringstream s;
  s << ok << "/" << corpus.size() << " proofs end-active with identical conclusions (" << corpus.size() - was_end_active
    << " were not end-active before) in " << seconds_since(t0) << " s";
  o.summary = s.str();
  return o;
}

Verdict criterion5() {
  Verdict o;
  auto t0 = Clock::now();
  std::size_t ok = 0, was_normal = 0;
  for (const Proof& p : end_active_outputs) {
    try {
      Linearization lin = linearize(p);
      accepted_proofs.push_back(lin.proof);
      if (normal_form_report(lin.proof).accepted) ++was_normal;
      PassResult r = normalize_lngl(lin.proof);
      bool good = normal_form_report(r.proof).accepted && check_lngl(r.proof).accepted &&
                  print_sequent(r.proof.root.conclusion) == print_sequent(lin.proof.root.conclusion);
      if (good) {
        ++ok;
        accepted_proofs.push_back(r.proof);
      } else {
        o.fail("bad output for " + print_sequent(lin.proof.root.conclusion));
      }
    } catch (const Error& e) {
      o.fail(print_sequent(p.root.conclusion) + ": " + e.code() + " " + e.what());
    }
  }
  if (end_active_outputs.empty()) o.fail("empty corpus");
  std::ostringstream s;
  s << ok << "/" << end_active_outputs.size() << " proofs in normal form with unchanged conclusions ("
    << end_active_outputs.size() - was_normal << " needed permutations) in " << seconds_since(t0) << " s";
  o.summary = s.str();
  return o;
}

// Validity of a conclusion under its formula reading, at the default bound.
bool conclusion_valid(const Proof& p, const Sequent& s) {
  auto valid = [](Formula f) { return oracle_validity(f).valid; };
  switch (sequent_kind(p.calculus)) {
    case SequentKind::Gentzen:
      return valid(gentzen_interpretation(std::get<GentzenSequent>(s)));
    case SequentKind::Nested:
      return valid(lns_interpretation(std::get<LinearNestedSequent>(s)));
    case SequentKind::Labeled: {
      const auto& l = std::get<LabeledSequent>(s);
      if (!diagnose_tree(l)) return valid(tree_interpretation(l));
      return labeled_sequent_valid_bruteforce(l, 3);
    }
  }
  return false;
}

Verdict criterion6() {
  Verdict o;
  auto t0 = Clock::now();
  for (const auto& entry : std::filesystem::directory_iterator(GLWB_FIXTURE_DIR)) {
    if (entry.path().extension() != ".glp") continue;
    std::ifstream in(entry.path());
    std::string text((std::istreambuf_iterator<char>(in)), {});
    Proof p = read_proof(text);
    if (p.calculus == Calculus::GLcirc ? check_glcirc(p).accepted : check_proof(p, CheckMode::Extended).accepted) {
      accepted_proofs.push_back(p);
    }
  }
  std::size_t roots = 0, nodes = 0, failures = 0;
  std::set<std::string> seen;
  for (const Proof& p : accepted_proofs) {
    std::string key = std::string(calculus_name(p.calculus)) + print_sequent(p.root.conclusion);
    bool fresh = seen.insert(key).second;
    if (!fresh) continue;
    ++roots;
    for_each_node(p.root, [&](const ProofNode& n, const Address& at) {
      // Every subproof of an accepted proof is itself accepted, except
      // inside cycles, where only the root is audited.
      if (p.calculus == Calculus::GLcirc && !at.empty()) return;
      ++nodes;
      if (!conclusion_valid(p, n.conclusion)) {
        ++failures;
        o.fail(std::string(calculus_name(p.calculus)) + " " + print_sequent(n.conclusion) + " is not valid");
      }
    });
  }
  std::ostringstream s;
  s << roots << " distinct accepted proofs, " << nodes << " audited sequents, " << failures << " failures in "
    << seconds_since(t0) << " s";
  o.summary = s.str();
  return o;
}

std::string expected_code(const std::string& text) {
  const std::string tag = "; expect: ";
  auto at = text.find(tag);
  if (at == std::string::npos) return {};
  auto end = text.find('\n', at);
  return text.substr(at + tag.size(), end - at - tag.size());
}

Verdict criterion7() {
  Verdict o;
  static const std::vector<std::string> files{"neg_freshness.glp",          "neg_backlink_self.glp",
                                              "neg_backlink_not_ancestor.glp", "neg_backlink_mismatch.glp",
                                              "neg_not_tree.glp",           "neg_partition.glp"};
  std::size_t ok = 0;
  for (const auto& name : files) {
    std::ifstream in(std::filesystem::path(GLWB_FIXTURE_DIR) / name);
    if (!in) {
      o.fail("missing fixture " + name);
      continue;
    }
    std::string text((std::istreambuf_iterator<char>(in)), {});
    std::string want = expected_code(text);
    CheckReport rep = check_proof(read_proof(text));
    std::set<std::string> got;
    for (const auto& f : rep.failures) got.insert(f.qualified_code());
    if (!rep.accepted && got == std::set<std::string>{want}) {
      ++ok;
    } else {
      std::string all;
      for (const auto& g : got) all += g + " ";
      o.fail(name + ": expected " + want + ", got " + (all.empty() ? "acceptance" : all));
    }
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(files.size()) + " fixtures rejected with exactly the expected code";
  return o;
}

Verdict criterion8() {
  Verdict o;
  std::ifstream in(std::filesystem::path(GLWB_FIXTURE_DIR) / "lob_cyclic.glp");
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CyclicDerivation d = read_proof(text);
  CheckReport rep = check_glcirc(d);
  if (!rep.accepted) o.fail("check_glcirc: " + rep.text());
  Proof u = unfold_glcirc(d, 2);
  CheckReport prefix = check_k4seq_prefix(u);
  if (!prefix.accepted) o.fail("unfolded prefix: " + prefix.text());
  std::size_t leaves = 0, min_boxes = SIZE_MAX;
  std::function<void(const ProofNode&, std::size_t)> walk = [&](const ProofNode& n, std::size_t boxes) {
    if (n.rule == Rule::Box4) ++boxes;
    if (n.rule == Rule::Open) {
      ++leaves;
      min_boxes = std::min(min_boxes, boxes);
    }
    for (const auto& p : n.premises) walk(p, boxes);
  };
  walk(u.root, 0);
  if (leaves == 0) o.fail("no open leaves after unfolding");
  if (min_boxes < 2) o.fail("an open-leaf path has " + std::to_string(min_boxes) + " box4 nodes");
  std::ostringstream s;
  s << "cyclic proof " << (rep.accepted ? "accepted" : "rejected") << "; depth-2 unfolding has " << node_count(u.root)
    << " nodes, " << leaves << " open leaves, min box4 per path " << (leaves ? min_boxes : 0);
  o.summary = s.str();
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"pipeline end to end", criterion1},    {"oracle agreement", criterion2},
      {"hp-properties", criterion3},          {"end-activation", criterion4},
      {"normal form", criterion5},            {"soundness audit", criterion6},
      {"negative suite", criterion7},         {"cyclic fixture", criterion8}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.summary << std::endl;
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
