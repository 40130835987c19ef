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

#include "glwb/checkers.hpp"

#include <map>

#include "glwb/rules.hpp"

namespace glwb {
namespace {

struct Options {
  Calculus calculus;
  bool allow_extended = false;  // g3gl extended mode
  bool allow_open = false;
  bool trees = false;  // every conclusion must be a tree sequent
};

Failure failure(std::string code, const Address& at, std::string message, std::string detail = {}) {
  return Failure{std::move(code), std::move(detail), at, std::move(message)};
}

bool kind_matches(Calculus c, const Sequent& s) {
  switch (sequent_kind(c)) {
    case SequentKind::Gentzen:
      return std::holds_alternative<GentzenSequent>(s);
    case SequentKind::Labeled:
      return std::holds_alternative<LabeledSequent>(s);
    case SequentKind::Nested:
      return std::holds_alternative<LinearNestedSequent>(s);
  }
  return false;
}

void check_rule(const Options& o, const ProofNode& n, const Address& at, CheckReport& report) {
  if (!kind_matches(o.calculus, n.conclusion)) {
    report.fail(failure("SchemaMismatch", at, "sequent kind does not match the calculus"));
    return;
  }
  if (o.trees) {
    if (auto d = diagnose_tree(n.labeled())) {
      report.fail(failure("NotATree", at, print_sequent(n.conclusion), to_string(*d)));
      return;
    }
  }
  if (n.rule == Rule::Open) {
    if (!o.allow_open) report.fail(failure("OpenLeaf", at, "unproved leaf"));
    return;
  }
  Calculus effective = o.calculus;
  if (o.allow_extended && effective == Calculus::G3GL) effective = Calculus::G3GLext;
  if (!rule_in_calculus(effective, n.rule)) {
    bool strict_only = o.calculus == Calculus::G3GL && rule_in_calculus(Calculus::G3GLext, n.rule);
    report.fail(failure(strict_only ? "UnknownRuleInStrictMode" : "UnknownRule", at,
                        std::string(rule_name(n.rule)) + " is not a rule of " + calculus_name(o.calculus)));
    return;
  }
  if (n.rule == Rule::Weaken || n.rule == Rule::Subst) {
    if (n.premises.size() != 1) {
      report.fail(failure("WrongPremiseCount", at, "expected 1 premise, found " + std::to_string(n.premises.size())));
      return;
    }
    const Sequent& prem = n.premises[0].conclusion;
    if (n.rule == Rule::Weaken) {
      if (!weakens_to(prem, n.conclusion)) {
        report.fail(failure("SchemaMismatch", at, "w: premise is not contained in the conclusion"));
      }
      return;
    }
    if (!n.meta.label || !n.meta.aux) {
      report.fail(failure("SchemaMismatch", at, "subst: needs label and aux"));
      return;
    }
    LabeledSequent image = rename_labels(std::get<LabeledSequent>(prem), *n.meta.aux, *n.meta.label);
    if (!(image == n.labeled())) {
      report.fail(failure("SchemaMismatch", at,
                          "subst: premise with " + *n.meta.aux + " renamed to " + *n.meta.label +
                              " is " + print_labeled(image)));
    }
    return;
  }
  std::vector<Sequent> expected;
  try {
    expected = expand(o.calculus == Calculus::GLcirc ? Calculus::K4seq : effective, n.rule, n.meta, n.conclusion);
  } catch (const SchemaError& e) {
    report.fail(failure(e.code(), at, e.what()));
    return;
  }
  if (expected.size() != n.premises.size()) {
    report.fail(failure("WrongPremiseCount", at,
                        std::string(rule_name(n.rule)) + ": expected " + std::to_string(expected.size()) +
                            " premises, found " + std::to_string(n.premises.size())));
    return;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(expected[i] == n.premises[i].conclusion)) {
      report.fail(failure("SchemaMismatch", at,
                          std::string(rule_name(n.rule)) + ": premise " + std::to_string(i) + " should be '" +
                              print_sequent(expected[i]) + "' but is '" +
                              print_sequent(n.premises[i].conclusion) + "'"));
    }
  }
}

void walk(const Options& o, const ProofNode& n, Address& at, CheckReport& report) {
  check_rule(o, n, at, report);
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    at.push_back(i);
    walk(o, n.premises[i], at, report);
    at.pop_back();
  }
}

void freshness_lint(const ProofNode& root, CheckReport& report) {
  std::map<Label, Address> seen;
  for_each_node(root, [&](const ProofNode& n, const Address& at) {
    if (n.rule != Rule::BoxR || !n.meta.aux) return;
    auto [it, fresh] = seen.emplace(*n.meta.aux, at);
    if (!fresh) {
      report.fail(failure("FreshnessViolation", at,
                          "label " + *n.meta.aux + " already introduced at " + print_address(it->second),
                          "global"));
    }
  });
}

CheckReport run(const Proof& p, Calculus expected, Options o) {
  CheckReport report;
  if (p.calculus != expected) {
    report.fail(failure("WrongCalculus", {},
                        std::string("proof is tagged ") + calculus_name(p.calculus) + ", expected " +
                            calculus_name(expected)));
    return report;
  }
  Address at;
  walk(o, p.root, at, report);
  if (sequent_kind(expected) == SequentKind::Labeled) freshness_lint(p.root, report);
  return report;
}

bool is_proper_prefix(const Address& a, const Address& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

void check_segment(const ProofNode& n, Address& at, int phase, CheckReport& report) {
  if (n.rule == Rule::BoxR || is_initial(n.rule) || n.rule == Rule::Open) return;
  int next = phase;
  if (n.rule == Rule::FourL) {
    if (phase != 0) report.fail(failure("BlockViolation", at, "4L above a later block", "4L"));
  } else if (n.rule == Rule::BoxL) {
    if (phase == 2) report.fail(failure("BlockViolation", at, "boxL above a local rule", "boxL"));
    next = std::max(phase, 1);
  } else {
    next = 2;
  }
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    at.push_back(i);
    check_segment(n.premises[i], at, next, report);
    at.pop_back();
  }
}

}  // namespace

std::string Failure::qualified_code() const { return detail.empty() ? code : code + "(" + detail + ")"; }

std::string Failure::line() const {
  std::string addr = address.empty() ? "." : print_address(address);
  return qualified_code() + "\t" + addr + "\t" + message;
}

void CheckReport::fail(Failure f) {
  accepted = false;
  failures.push_back(std::move(f));
}

std::string CheckReport::text() const {
  std::string out;
  for (const auto& f : failures) out += f.line() + "\n";
  return out;
}

CheckReport check_glseq(const Proof& p) { return run(p, Calculus::GLseq, {Calculus::GLseq}); }

CheckReport check_k4seq(const Proof& p) { return run(p, Calculus::K4seq, {Calculus::K4seq}); }

CheckReport check_g3gl(const Proof& p, CheckMode mode) {
  if (p.calculus == Calculus::G3GLext) return run(p, Calculus::G3GLext, {Calculus::G3GLext});
  return run(p, Calculus::G3GL, {Calculus::G3GL, mode == CheckMode::Extended});
}

CheckReport check_csgl(const Proof& p) {
  return run(p, Calculus::CSGL, {Calculus::CSGL, false, false, true});
}

CheckReport check_lngl(const Proof& p) { return run(p, Calculus::LNGL, {Calculus::LNGL}); }

CheckReport check_k4seq_prefix(const Proof& p) {
  CheckReport report;
  if (p.calculus != Calculus::K4seq && p.calculus != Calculus::GLcirc) {
    report.fail(failure("WrongCalculus", {}, "expected a k4seq or glcirc derivation"));
    return report;
  }
  Address at;
  walk({Calculus::K4seq, false, true}, p.root, at, report);
  return report;
}

CheckReport check_glcirc(const CyclicDerivation& d) {
  CheckReport report = run(d, Calculus::GLcirc, {Calculus::GLcirc, false, true});
  if (d.calculus != Calculus::GLcirc) return report;
  for_each_node(d.root, [&](const ProofNode& n, const Address& at) {
    if (n.rule != Rule::Open) return;
    if (!n.backlink) {
      report.fail(failure("OpenLeaf", at, "leaf is neither initial nor back-linked"));
      return;
    }
    const Address& t = *n.backlink;
    if (t == at) {
      report.fail(failure("BadBacklink", at, "leaf links to itself", "self"));
      return;
    }
    if (!is_proper_prefix(t, at)) {
      report.fail(failure("BadBacklink", at, "target " + print_address(t) + " is not an ancestor", "not-ancestor"));
      return;
    }
    const ProofNode& target = node_at(d.root, t);
    if (!(target.conclusion == n.conclusion)) {
      report.fail(failure("BadBacklink", at, "target carries '" + print_sequent(target.conclusion) + "'",
                          "sequent-mismatch"));
      return;
    }
    bool boxed = false;
    for (std::size_t k = t.size(); k < at.size() && !boxed; ++k) {
      Address prefix(at.begin(), at.begin() + static_cast<std::ptrdiff_t>(k));
      boxed = node_at(d.root, prefix).rule == Rule::Box4;
    }
    if (!boxed) report.fail(failure("LintNoBoxOnCycle", at, "cycle through " + print_address(t) + " has no box4"));
  });
  return report;
}

CheckReport check_proof(const Proof& p, CheckMode mode) {
  switch (p.calculus) {
    case Calculus::GLseq:
      return check_glseq(p);
    case Calculus::K4seq:
      return check_k4seq(p);
    case Calculus::G3GL:
    case Calculus::G3GLext:
      return check_g3gl(p, mode);
    case Calculus::CSGL:
      return check_csgl(p);
    case Calculus::LNGL:
      return check_lngl(p);
    case Calculus::GLcirc:
      return check_glcirc(p);
  }
  return {};
}

CheckReport end_active_report(const Proof& p) {
  CheckReport report;
  if (p.calculus != Calculus::CSGL) {
    report.fail(failure("WrongCalculus", {}, "end-activity is defined for csgl proofs"));
    return report;
  }
  for_each_node(p.root, [&](const ProofNode& n, const Address& at) {
    if (n.rule == Rule::BoxR || n.rule == Rule::Open || !n.meta.label) return;
    const LabeledSequent& s = n.labeled();
    const Label& x = *n.meta.label;
    bool ok = true;
    if (is_propagation(n.rule)) {
      ok = n.meta.aux && is_pre_leaf(s, x) && is_leaf(s, *n.meta.aux);
    } else {
      ok = is_leaf(s, x);
    }
    if (!ok) {
      report.fail(failure("NotEndActive", at,
                          std::string(rule_name(n.rule)) + " at " + x + " is not at the end of the tree"));
    }
  });
  return report;
}

CheckReport normal_form_report(const Proof& p) {
  CheckReport report;
  if (p.calculus != Calculus::LNGL) {
    report.fail(failure("WrongCalculus", {}, "normal form is defined for lngl proofs"));
    return report;
  }
  for_each_node(p.root, [&](const ProofNode& n, const Address& at) {
    if (n.rule != Rule::BoxR || n.premises.size() != 1) return;
    Address a = at;
    a.push_back(0);
    check_segment(n.premises[0], a, 0, report);
  });
  return report;
}

}  // namespace glwb
