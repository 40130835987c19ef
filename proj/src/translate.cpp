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

#include <map>

#include "glwb/checkers.hpp"
#include "glwb/error.hpp"
#include "glwb/rules.hpp"
#include "glwb/search.hpp"
#include "glwb/transform.hpp"
#include "transform_internal.hpp"

namespace glwb {
namespace {

using detail::make_node;
using detail::principal_meta;

ProofNode to_glseq(const ProofNode& n) {
  const GentzenSequent& end = n.nested().end();
  switch (n.rule) {
    case Rule::Id1:
    case Rule::Id2:
      return make_node(Rule::Id, end, principal_meta(*n.meta.formula));
    case Rule::NegL:
    case Rule::NegR:
    case Rule::OrL:
    case Rule::OrR: {
      ProofNode out = make_node(n.rule, end, principal_meta(*n.meta.formula));
      for (const auto& p : n.premises) out.premises.push_back(to_glseq(p));
      return out;
    }
    case Rule::BoxR: {
      const ProofNode* cur = &n.premises[0];
      std::map<Formula, std::size_t> four, box_l;
      while (cur->rule == Rule::FourL) {
        ++four[*cur->meta.formula];
        cur = &cur->premises[0];
      }
      while (cur->rule == Rule::BoxL) {
        ++box_l[*cur->meta.formula];
        cur = &cur->premises[0];
      }
      std::map<Formula, std::size_t> merged = four;
      for (const auto& [f, k] : box_l) merged[f] = std::max(merged[f], k);
      Formula phi = *n.meta.formula;
      GentzenSequent prem;
      std::vector<Formula> boxes;
      for (const auto& [f, k] : merged) {
        for (std::size_t i = 0; i < k; ++i) {
          boxes.push_back(f);
          prem.antecedent.push_back(f);
          prem.antecedent.push_back(f.sub());
        }
      }
      prem.antecedent.push_back(phi);
      prem.consequent.push_back(phi.sub());
      prem.normalize();
      if (!ms_includes(end.antecedent, boxes)) {
        throw PassError("NotNormalForm", "boxed context exceeds the antecedent of " + print_gentzen(end));
      }
      ProofNode top = to_glseq(*cur);
      const GentzenSequent& proved = top.gentzen();
      if (!ms_includes(prem.antecedent, proved.antecedent) || !ms_includes(prem.consequent, proved.consequent)) {
        throw PassError("NotNormalForm", "modal block does not match its premise");
      }
      ProofNode widened = weaken(Calculus::GLseq, top, detail::sequent_difference(prem, proved));
      ProofNode out = make_node(Rule::BoxGL, end, principal_meta(phi));
      out.meta.boxes = boxes;
      out.premises.push_back(std::move(widened));
      return out;
    }
    default:
      throw PassError("NotNormalForm", std::string(rule_name(n.rule)) + " outside a modal block");
  }
}

LabeledSequent at_label(const GentzenSequent& g, const Label& a) {
  LabeledSequent s;
  for (Formula f : g.antecedent) s.antecedent.push_back({a, f});
  for (Formula f : g.consequent) s.consequent.push_back({a, f});
  s.normalize();
  return s;
}

class G3Translator {
 public:
  ProofNode translate(const ProofNode& n, const Label& a) {
    const GentzenSequent& g = n.gentzen();
    LabeledSequent concl = at_label(g, a);
    switch (n.rule) {
      case Rule::Id:
        return prove_general_id(Calculus::G3GLext, concl, *n.meta.formula, a);
      case Rule::NegL:
      case Rule::NegR:
      case Rule::OrL:
      case Rule::OrR: {
        ProofNode out = make_node(n.rule, concl, principal_meta(*n.meta.formula, a));
        for (const auto& p : n.premises) out.premises.push_back(translate(p, a));
        return out;
      }
      case Rule::BoxGL:
        return box_gl(n, a, concl);
      default:
        throw PassError("WrongCalculus", std::string(rule_name(n.rule)) + " is not a glseq rule");
    }
  }

 private:
  ProofNode box_gl(const ProofNode& n, const Label& a, const LabeledSequent& concl) {
    Formula phi = *n.meta.formula;
    std::vector<Formula> boxes = n.meta.boxes;
    std::sort(boxes.begin(), boxes.end());
    Label b = fresh(), c = fresh();
    ProofNode top = translate(n.premises[0], b);

    LabeledSequent s = top.labeled();
    s.add_relation(c, b);
    for (Formula f : boxes) ms_insert(s.antecedent, LabeledFormula{c, f});
    ProofNode cur = make_node(Rule::Weaken, s, {}, {std::move(top)});

    for (Formula f : boxes) {
      LabeledSequent below = cur.labeled();
      ms_erase_one(below.antecedent, LabeledFormula{b, f.sub()});
      RuleMeta m = principal_meta(f, c);
      m.aux = b;
      cur = make_node(Rule::BoxL, below, m, {std::move(cur)});
    }
    for (Formula f : boxes) {
      LabeledSequent below = cur.labeled();
      ms_erase_one(below.antecedent, LabeledFormula{b, f});
      RuleMeta m = principal_meta(f, c);
      m.aux = b;
      cur = make_node(Rule::FourL, below, m, {std::move(cur)});
    }
    GentzenSequent boxed{boxes, {phi}};
    RuleMeta br = principal_meta(phi, c);
    br.aux = b;
    cur = make_node(Rule::BoxR, at_label(boxed, c), br, {std::move(cur)});
    RuleMeta sub;
    sub.label = a;
    sub.aux = c;
    cur = make_node(Rule::Subst, at_label(boxed, a), sub, {std::move(cur)});
    if (cur.labeled() == concl) return cur;
    return make_node(Rule::Weaken, concl, {}, {std::move(cur)});
  }

  Label fresh() { return "t" + std::to_string(++counter_); }

  std::size_t counter_ = 0;
};

ProofNode unfold(const ProofNode& n, const ProofNode& root, std::size_t depth) {
  if (n.rule == Rule::Open && n.backlink && depth > 0) {
    return unfold(node_at(root, *n.backlink), root, depth - 1);
  }
  ProofNode out = make_node(n.rule, n.conclusion, n.meta);
  out.backlink = n.backlink;
  for (const auto& p : n.premises) out.premises.push_back(unfold(p, root, depth));
  return out;
}

PassReport measure(const std::string& name, const ProofNode& in, const ProofNode& out) {
  PassReport r;
  r.pass = name;
  r.nodes_in = node_count(in);
  r.nodes_out = node_count(out);
  r.height_in = height(in);
  r.height_out = height(out);
  return r;
}

void require_accepted(const Proof& p, const std::string& stage) {
  CheckReport rep = check_proof(p);
  if (!rep.accepted) throw PassError("StageRejected", stage + ": " + rep.text());
}

}  // namespace

PassResult lngl_to_glseq(const Proof& lngl) {
  if (lngl.calculus != Calculus::LNGL) throw PassError("WrongCalculus", "expects an lngl proof");
  if (lngl.root.nested().length() != 1) throw PassError("ShapeViolation", "conclusion must have one component");
  CheckReport nf = normal_form_report(lngl);
  if (!nf.accepted) throw PassError("NotNormalForm", nf.text());
  PassResult r{{Calculus::GLseq, to_glseq(lngl.root)}, {}};
  r.report = measure("glseq", lngl.root, r.proof.root);
  return r;
}

PassResult glseq_to_g3gl(const Proof& glseq) {
  if (glseq.calculus != Calculus::GLseq) throw PassError("WrongCalculus", "expects a glseq proof");
  G3Translator t;
  PassResult r{{Calculus::G3GLext, t.translate(glseq.root, "x")}, {}};
  canonicalize_labels(r.proof);
  r.report = measure("g3gl", glseq.root, r.proof.root);
  return r;
}

Proof csgl_to_g3gl_embed(const Proof& csgl) {
  if (csgl.calculus != Calculus::CSGL) throw PassError("WrongCalculus", "expects a csgl proof");
  Proof out = csgl;
  out.calculus = Calculus::G3GLext;
  return out;
}

Proof unfold_glcirc(const CyclicDerivation& d, std::size_t depth) {
  if (d.calculus != Calculus::GLcirc) throw PassError("WrongCalculus", "expects a glcirc derivation");
  return {Calculus::K4seq, unfold(d.root, d.root, depth)};
}

std::vector<Stage> pipeline(Formula f) {
  std::vector<Stage> stages;
  SearchResult found = decide_csgl(f);
  if (found.outcome != Outcome::Proved) {
    throw PassError(found.outcome == Outcome::NotProved ? "NotProved" : "FuelExhausted",
                    print_formula(f) + " has no csgl proof");
  }
  Proof csgl = *found.proof;
  require_accepted(csgl, "csgl");
  stages.push_back({"csgl", csgl, measure("csgl", csgl.root, csgl.root)});

  PassResult ea = to_end_active(csgl);
  require_accepted(ea.proof, "end-active");
  stages.push_back({"end-active", ea.proof, ea.report});

  Linearization lin = linearize(ea.proof);
  require_accepted(lin.proof, "lngl");
  PassReport lr = measure("lngl", ea.proof.root, lin.proof.root);
  stages.push_back({"lngl", lin.proof, lr});

  PassResult nf = normalize_lngl(lin.proof);
  require_accepted(nf.proof, "normal");
  stages.push_back({"normal", nf.proof, nf.report});

  PassResult gs = lngl_to_glseq(nf.proof);
  require_accepted(gs.proof, "glseq");
  stages.push_back({"glseq", gs.proof, gs.report});

  PassResult g3 = glseq_to_g3gl(gs.proof);
  require_accepted(g3.proof, "g3gl");
  stages.push_back({"g3gl", g3.proof, g3.report});
  return stages;
}

}  // namespace glwb
