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

#include "glwb/error.hpp"
#include "glwb/rules.hpp"
#include "glwb/transform.hpp"
#include "transform_internal.hpp"

namespace glwb {
namespace detail {

Sequent sequent_union(const Sequent& a, const Sequent& extra) {
  if (auto* g = std::get_if<GentzenSequent>(&a)) {
    auto& e = std::get<GentzenSequent>(extra);
    return GentzenSequent{ms_union(g->antecedent, e.antecedent), ms_union(g->consequent, e.consequent)};
  }
  if (auto* l = std::get_if<LabeledSequent>(&a)) {
    auto& e = std::get<LabeledSequent>(extra);
    LabeledSequent out = *l;
    for (const auto& [x, y] : e.relations) out.add_relation(x, y);
    out.antecedent = ms_union(out.antecedent, e.antecedent);
    out.consequent = ms_union(out.consequent, e.consequent);
    return out;
  }
  auto out = std::get<LinearNestedSequent>(a);
  auto& e = std::get<LinearNestedSequent>(extra);
  if (e.length() > out.length()) throw PassError("ShapeViolation", "weakening is longer than the sequent");
  for (std::size_t i = 0; i < e.length(); ++i) {
    out.components[i] = std::get<GentzenSequent>(sequent_union(out.components[i], e.components[i]));
  }
  return out;
}

Sequent sequent_difference(const Sequent& big, const Sequent& small) {
  if (auto* g = std::get_if<GentzenSequent>(&big)) {
    auto& s = std::get<GentzenSequent>(small);
    return GentzenSequent{ms_difference(g->antecedent, s.antecedent), ms_difference(g->consequent, s.consequent)};
  }
  if (auto* l = std::get_if<LabeledSequent>(&big)) {
    auto& s = std::get<LabeledSequent>(small);
    LabeledSequent out;
    out.relations = ms_difference(l->relations, s.relations);
    out.antecedent = ms_difference(l->antecedent, s.antecedent);
    out.consequent = ms_difference(l->consequent, s.consequent);
    return out;
  }
  auto& b = std::get<LinearNestedSequent>(big);
  auto& s = std::get<LinearNestedSequent>(small);
  if (b.length() != s.length()) throw PassError("ShapeViolation", "component counts differ");
  LinearNestedSequent out;
  for (std::size_t i = 0; i < b.length(); ++i) {
    out.components.push_back(std::get<GentzenSequent>(sequent_difference(b.components[i], s.components[i])));
  }
  return out;
}

std::set<Label> sequent_labels(const Sequent& s) {
  std::set<Label> out;
  if (auto* l = std::get_if<LabeledSequent>(&s)) {
    for (auto& x : l->labels()) out.insert(x);
  }
  return out;
}

ProofNode make_node(Rule r, Sequent conclusion, RuleMeta meta, std::vector<ProofNode> premises) {
  ProofNode n;
  n.rule = r;
  n.conclusion = std::move(conclusion);
  n.meta = std::move(meta);
  n.premises = std::move(premises);
  return n;
}

RuleMeta principal_meta(Formula f, const std::optional<Label>& label) {
  RuleMeta m;
  m.label = label;
  m.formula = f;
  return m;
}

}  // namespace detail

namespace {

using namespace detail;

std::vector<Sequent> expand_or_fail(Calculus c, Rule r, const RuleMeta& m, const Sequent& s) {
  try {
    return expand(c, r, m, s);
  } catch (const SchemaError& e) {
    throw PassError("NotApplicable", std::string(rule_name(r)) + ": " + e.what());
  }
}

// Renames binders listed in `avoid` so that the labels can be introduced
// into the subproof without capture.
void avoid_binders(ProofNode& n, const std::set<Label>& avoid, NameGen& gen) {
  if (binds(n) && avoid.count(*n.meta.aux)) {
    Label nb = gen.next();
    for (auto& p : n.premises) detail::rename_free(p, *n.meta.aux, nb, gen);
    n.meta.aux = nb;
  }
  for (auto& p : n.premises) avoid_binders(p, avoid, gen);
}

NameGen generator_for(const ProofNode& p, const std::set<Label>& extra) {
  std::set<Label> used = labels_in(p);
  used.insert(extra.begin(), extra.end());
  return NameGen(std::move(used));
}

bool modal_gentzen(Rule r) { return r == Rule::BoxGL || r == Rule::Box4; }

void weaken_rec(Calculus c, ProofNode& n, const Sequent& extra) {
  n.conclusion = sequent_union(n.conclusion, extra);
  if (n.rule == Rule::Weaken) return;
  if (sequent_kind(c) == SequentKind::Gentzen && modal_gentzen(n.rule)) return;
  for (auto& p : n.premises) weaken_rec(c, p, extra);
}

bool same_instance(Calculus c, const ProofNode& n, Rule r, const RuleMeta& m) {
  if (n.rule != r || n.meta.formula != m.formula) return false;
  return sequent_kind(c) != SequentKind::Labeled || n.meta.label == m.label;
}

bool side_contains(const Sequent& s, const LabeledFormula& lf, bool antecedent) {
  const auto& l = std::get<LabeledSequent>(s);
  return ms_contains(antecedent ? l.antecedent : l.consequent, lf);
}

bool principal_on_left(Rule r) { return r == Rule::NegL || r == Rule::OrL; }

bool principal_in(Calculus c, const Sequent& s, Rule r, const RuleMeta& m) {
  bool left = principal_on_left(r) || is_propagation(r);
  if (sequent_kind(c) == SequentKind::Labeled) return side_contains(s, {*m.label, *m.formula}, left);
  const auto& g = std::get<GentzenSequent>(s);
  return ms_contains(left ? g.antecedent : g.consequent, *m.formula);
}

ProofNode local_inverse(Calculus c, const ProofNode& n, Rule r, const RuleMeta& m, std::size_t branch) {
  if (same_instance(c, n, r, m)) return n.premises[branch];
  ProofNode out = make_node(n.rule, expand_or_fail(c, r, m, n.conclusion)[branch], n.meta);
  if (is_initial(n.rule)) return out;
  if (sequent_kind(c) == SequentKind::Gentzen && modal_gentzen(n.rule)) {
    out.premises = n.premises;
    return out;
  }
  if (n.rule == Rule::Subst) throw PassError("NotApplicable", "inversion through subst");
  if (n.rule == Rule::Weaken && !principal_in(c, n.premises[0].conclusion, r, m)) {
    out.premises = n.premises;
    return out;
  }
  for (const auto& p : n.premises) out.premises.push_back(local_inverse(c, p, r, m, branch));
  return out;
}

ProofNode nested_local_inverse(Calculus c, const ProofNode& n, Rule r, const RuleMeta& m, std::size_t branch,
                               std::size_t k) {
  auto mod = [&](const LinearNestedSequent& s) {
    LinearNestedSequent head;
    head.components.assign(s.components.begin(), s.components.begin() + static_cast<std::ptrdiff_t>(k + 1));
    auto e = std::get<LinearNestedSequent>(expand_or_fail(c, r, m, head)[branch]);
    LinearNestedSequent out = s;
    out.components[k] = e.end();
    return out;
  };
  if (n.rule == r && n.meta.formula == m.formula && n.nested().length() == k + 1) return n.premises[branch];
  ProofNode out = make_node(n.rule, mod(n.nested()), n.meta);
  for (const auto& p : n.premises) out.premises.push_back(nested_local_inverse(c, p, r, m, branch, k));
  return out;
}

ProofNode box_right_inverse(Calculus c, const ProofNode& n, const RuleMeta& m, NameGen& gen) {
  const Label& x = *m.label;
  Formula bf = *m.formula;
  const Label& z = *m.aux;
  Sequent target = expand_or_fail(c, Rule::BoxR, m, n.conclusion)[0];
  if (n.rule == Rule::BoxR && n.meta.label == m.label && n.meta.formula == m.formula) {
    ProofNode prem = n.premises[0];
    detail::rename_free(prem, *n.meta.aux, z, gen);
    return prem;
  }
  if (n.rule == Rule::Id2 && n.meta.label == m.label && n.meta.formula == m.formula &&
      ms_count(n.labeled().consequent, LabeledFormula{x, bf}) == 1) {
    // The identity loses its right occurrence; rebuild it one world up.
    RuleMeta bl = principal_meta(bf, x);
    bl.aux = z;
    Sequent above = expand_or_fail(c, Rule::BoxL, bl, target)[0];
    return make_node(Rule::BoxL, target, bl, {prove_general_id(c, above, bf.sub(), z)});
  }
  ProofNode out = make_node(n.rule, target, n.meta);
  if (is_initial(n.rule)) return out;
  if (n.rule == Rule::Subst) throw PassError("NotApplicable", "inversion through subst");
  if (n.rule == Rule::Weaken && !side_contains(n.premises[0].conclusion, {x, bf}, false)) {
    out.premises = n.premises;
    return out;
  }
  for (const auto& p : n.premises) out.premises.push_back(box_right_inverse(c, p, m, gen));
  return out;
}

// Aux formulas a local rule adds to premise `branch`, with their sides.
std::vector<std::pair<LabeledFormula, bool>> local_aux(Rule r, const LabeledFormula& lf, std::size_t branch) {
  Formula f = lf.formula;
  switch (r) {
    case Rule::NegL:
      return {{{lf.label, f.sub()}, false}};
    case Rule::NegR:
      return {{{lf.label, f.sub()}, true}};
    case Rule::OrL:
      return {{{lf.label, branch == 0 ? f.left() : f.right()}, true}};
    case Rule::OrR:
      return {{{lf.label, f.left()}, false}, {{lf.label, f.right()}, false}};
    default:
      return {};
  }
}

LabeledSequent drop_one(const LabeledSequent& s, const LabeledFormula& lf, bool antecedent) {
  LabeledSequent out = s;
  if (!ms_erase_one(antecedent ? out.antecedent : out.consequent, lf)) {
    throw PassError("NotApplicable", "contraction: formula not present");
  }
  return out;
}

ProofNode contract_rec(Calculus c, const ProofNode& n, const LabeledFormula& lf, bool antecedent, NameGen& gen) {
  LabeledSequent target = drop_one(n.labeled(), lf, antecedent);
  bool principal = n.meta.label == lf.label && n.meta.formula == lf.formula &&
                   ((antecedent && (principal_on_left(n.rule) || is_propagation(n.rule))) ||
                    (!antecedent && (n.rule == Rule::NegR || n.rule == Rule::OrR || n.rule == Rule::BoxR)));
  if (is_initial(n.rule)) return make_node(n.rule, target, n.meta);
  if (principal && is_local(n.rule)) {
    ProofNode out = make_node(n.rule, target, n.meta);
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      ProofNode q = apply_inverse(c, n.premises[i], n.rule, n.meta, i);
      for (const auto& [aux, left] : local_aux(n.rule, lf, i)) q = contract_rec(c, q, aux, left, gen);
      out.premises.push_back(std::move(q));
    }
    return out;
  }
  if (principal && n.rule == Rule::BoxR) {
    const Label& y = *n.meta.aux;
    RuleMeta inv = n.meta;
    inv.aux = gen.next();
    ProofNode q = apply_inverse(c, n.premises[0], Rule::BoxR, inv, 0);
    detail::rename_free(q, *inv.aux, y, gen);
    q = contract_rec(c, q, {y, lf.formula}, true, gen);
    q = contract_rec(c, q, {y, lf.formula.sub()}, false, gen);
    return make_node(Rule::BoxR, target, n.meta, {std::move(q)});
  }
  ProofNode out = make_node(n.rule, target, n.meta);
  if (n.rule == Rule::Subst) throw PassError("NotApplicable", "contraction through subst");
  for (const auto& p : n.premises) {
    if (n.rule == Rule::Weaken && ms_count(antecedent ? p.labeled().antecedent : p.labeled().consequent, lf) < 2) {
      out.premises.push_back(p);
    } else {
      out.premises.push_back(contract_rec(c, p, lf, antecedent, gen));
    }
  }
  return out;
}

}  // namespace

ProofNode weaken(Calculus c, const ProofNode& p, const Sequent& extra) {
  ProofNode out = p;
  if (sequent_kind(c) == SequentKind::Labeled) {
    std::set<Label> fresh = sequent_labels(extra);
    NameGen gen = generator_for(p, fresh);
    avoid_binders(out, fresh, gen);
  }
  weaken_rec(c, out, extra);
  return out;
}

ProofNode apply_inverse(Calculus c, const ProofNode& p, Rule r, const RuleMeta& m, std::size_t branch) {
  std::vector<Sequent> prem = expand_or_fail(c, r, m, p.conclusion);
  if (branch >= prem.size()) throw PassError("NotApplicable", "no such premise");
  if (is_propagation(r)) return weaken(c, p, sequent_difference(prem[branch], p.conclusion));
  if (r == Rule::BoxR) {
    if (sequent_kind(c) != SequentKind::Labeled) throw PassError("NotApplicable", "boxR is not invertible here");
    NameGen gen = generator_for(p, {*m.aux});
    ProofNode copy = p;
    avoid_binders(copy, {*m.aux}, gen);
    return box_right_inverse(c, copy, m, gen);
  }
  if (!is_local(r)) throw PassError("NotApplicable", std::string(rule_name(r)) + " has no inverse");
  if (sequent_kind(c) == SequentKind::Nested) {
    return nested_local_inverse(c, p, r, m, branch, p.nested().length() - 1);
  }
  return local_inverse(c, p, r, m, branch);
}

ProofNode contract(Calculus c, const ProofNode& p, const LabeledFormula& lf, bool antecedent) {
  if (sequent_kind(c) != SequentKind::Labeled) throw PassError("NotApplicable", "contraction is implemented for labeled proofs");
  const auto& s = p.labeled();
  if (ms_count(antecedent ? s.antecedent : s.consequent, lf) < 2) {
    throw PassError("NotApplicable", "contraction needs two copies");
  }
  NameGen gen = generator_for(p, {});
  return contract_rec(c, p, lf, antecedent, gen);
}

ProofNode prove_general_id(Calculus c, const Sequent& s, Formula f, const Label& x) {
  bool labeled = sequent_kind(c) == SequentKind::Labeled;
  std::optional<Label> label = labeled ? std::optional<Label>(x) : std::nullopt;
  RuleMeta m = principal_meta(f, label);
  auto step = [&](Rule r, const Sequent& from) { return expand_or_fail(c, r, m, from); };
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Box: {
      Rule r = sequent_kind(c) == SequentKind::Gentzen ? Rule::Id : (f.is_atom() ? Rule::Id1 : Rule::Id2);
      step(r, s);
      return make_node(r, s, m);
    }
    case Connective::Not: {
      Sequent s1 = step(Rule::NegL, s)[0];
      Sequent s2 = step(Rule::NegR, s1)[0];
      ProofNode top = prove_general_id(c, s2, f.sub(), x);
      return make_node(Rule::NegL, s, m, {make_node(Rule::NegR, s1, m, {std::move(top)})});
    }
    case Connective::Or: {
      Sequent s1 = step(Rule::OrR, s)[0];
      auto branches = step(Rule::OrL, s1);
      ProofNode left = prove_general_id(c, branches[0], f.left(), x);
      ProofNode right = prove_general_id(c, branches[1], f.right(), x);
      return make_node(Rule::OrR, s, m, {make_node(Rule::OrL, s1, m, {std::move(left), std::move(right)})});
    }
  }
  throw PassError("InternalError", "unreachable");
}

Proof admit(const Proof& p, const Address& at) {
  Proof out = p;
  ProofNode& n = node_at(out.root, at);
  if (n.premises.size() != 1) throw PassError("NotApplicable", "admissible rule nodes have one premise");
  const ProofNode& prem = n.premises[0];
  ProofNode replacement;
  switch (n.rule) {
    case Rule::Weaken:
      replacement = weaken(p.calculus, prem, sequent_difference(n.conclusion, prem.conclusion));
      break;
    case Rule::Subst:
      replacement = substitute(p.calculus, prem, *n.meta.aux, *n.meta.label);
      break;
    case Rule::ContractL:
    case Rule::ContractR:
      replacement = contract(p.calculus, prem, {*n.meta.label, *n.meta.formula}, n.rule == Rule::ContractL);
      break;
    default:
      throw PassError("NotApplicable", std::string(rule_name(n.rule)) + " is not admitted by this pass");
  }
  n = std::move(replacement);
  return out;
}

Proof admit_all(const Proof& p) {
  Proof out = p;
  std::function<void(ProofNode&)> rec = [&](ProofNode& n) {
    for (auto& q : n.premises) rec(q);
    if (n.rule == Rule::Weaken || n.rule == Rule::Subst || n.rule == Rule::ContractL || n.rule == Rule::ContractR) {
      Proof tmp{out.calculus, n};
      n = admit(tmp, {}).root;
    }
  };
  rec(out.root);
  if (out.calculus == Calculus::G3GLext) {
    bool extended = false;
    for_each_node(out.root, [&](const ProofNode& n, const Address&) {
      if (!rule_in_calculus(Calculus::G3GL, n.rule)) extended = true;
    });
    if (!extended) out.calculus = Calculus::G3GL;
  }
  canonicalize_labels(out);
  return out;
}

}  // namespace glwb
