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

#include "glwb/rules.hpp"

namespace glwb {
namespace {

[[noreturn]] void mismatch(const std::string& msg) { throw SchemaError("SchemaMismatch", msg); }

Formula principal(const RuleMeta& m, Rule r) {
  if (!m.formula) mismatch(std::string(rule_name(r)) + ": missing principal formula");
  return *m.formula;
}

const Label& principal_label(const RuleMeta& m, Rule r) {
  if (!m.label) mismatch(std::string(rule_name(r)) + ": missing principal label");
  return *m.label;
}

const Label& aux_label(const RuleMeta& m, Rule r) {
  if (!m.aux) mismatch(std::string(rule_name(r)) + ": missing auxiliary label");
  return *m.aux;
}

void require_shape(Rule r, Formula f) {
  bool ok = true;
  switch (r) {
    case Rule::NegL:
    case Rule::NegR:
      ok = f.is_not();
      break;
    case Rule::OrL:
    case Rule::OrR:
      ok = f.is_or();
      break;
    case Rule::Id1:
      ok = f.is_atom();
      break;
    case Rule::Id2:
    case Rule::BoxL:
    case Rule::FourL:
    case Rule::BoxR:
    case Rule::BoxGL:
    case Rule::Box4:
      ok = f.is_box();
      break;
    default:
      break;
  }
  if (!ok) mismatch(std::string(rule_name(r)) + ": principal " + print_formula(f) + " has the wrong shape");
}

std::string describe(Formula f) { return "'" + print_formula(f) + "'"; }

// Local and initial rules on a Gentzen sequent.
std::vector<GentzenSequent> expand_flat(Rule r, Formula f, const GentzenSequent& s) {
  require_shape(r, f);
  auto need = [&](const std::vector<Formula>& side, const char* where) {
    if (!ms_contains(side, f)) mismatch(std::string(rule_name(r)) + ": " + describe(f) + " not in " + where);
  };
  switch (r) {
    case Rule::Id:
    case Rule::Id1:
    case Rule::Id2:
      need(s.antecedent, "antecedent");
      need(s.consequent, "consequent");
      return {};
    case Rule::NegL: {
      need(s.antecedent, "antecedent");
      GentzenSequent p = s;
      ms_erase_one(p.antecedent, f);
      ms_insert(p.consequent, f.sub());
      return {p};
    }
    case Rule::NegR: {
      need(s.consequent, "consequent");
      GentzenSequent p = s;
      ms_erase_one(p.consequent, f);
      ms_insert(p.antecedent, f.sub());
      return {p};
    }
    case Rule::OrL: {
      need(s.antecedent, "antecedent");
      GentzenSequent a = s;
      ms_erase_one(a.antecedent, f);
      GentzenSequent b = a;
      ms_insert(a.antecedent, f.left());
      ms_insert(b.antecedent, f.right());
      return {a, b};
    }
    case Rule::OrR: {
      need(s.consequent, "consequent");
      GentzenSequent p = s;
      ms_erase_one(p.consequent, f);
      ms_insert(p.consequent, f.left());
      ms_insert(p.consequent, f.right());
      return {p};
    }
    default:
      mismatch(std::string(rule_name(r)) + " is not a local rule");
  }
}

bool found_elsewhere(const LinearNestedSequent& s, std::size_t skip, Formula f) {
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i == skip) continue;
    const auto& c = s.components[i];
    if (ms_contains(c.antecedent, f) || ms_contains(c.consequent, f)) return true;
  }
  return false;
}

std::vector<Sequent> expand_gentzen(Calculus c, Rule r, const RuleMeta& m, const GentzenSequent& s) {
  Formula f = principal(m, r);
  if (r == Rule::BoxGL || r == Rule::Box4) {
    require_shape(r, f);
    if (!ms_contains(s.consequent, f)) mismatch(std::string(rule_name(r)) + ": " + describe(f) + " not in consequent");
    std::vector<Formula> boxes = m.boxes;
    std::sort(boxes.begin(), boxes.end());
    for (Formula b : boxes) {
      if (!b.is_box()) throw SchemaError("BadPartition", describe(b) + " in the boxed context is not boxed");
    }
    if (!ms_includes(s.antecedent, boxes)) {
      throw SchemaError("BadPartition", "boxed context is not a sub-multiset of the antecedent");
    }
    GentzenSequent p;
    for (Formula b : boxes) {
      p.antecedent.push_back(b);
      p.antecedent.push_back(b.sub());
    }
    if (r == Rule::BoxGL) p.antecedent.push_back(f);
    p.consequent.push_back(f.sub());
    p.normalize();
    return {p};
  }
  if (r == Rule::Id) {
    (void)c;
    if (!ms_contains(s.antecedent, f) || !ms_contains(s.consequent, f)) {
      mismatch("id: " + describe(f) + " does not occur on both sides");
    }
    return {};
  }
  std::vector<Sequent> out;
  for (auto& g : expand_flat(r, f, s)) out.emplace_back(std::move(g));
  return out;
}

LabeledSequent with_flat(const LabeledSequent& s, const Label& x, const GentzenSequent& old,
                         const GentzenSequent& now) {
  LabeledSequent out = s;
  for (Formula f : old.antecedent) ms_erase_one(out.antecedent, LabeledFormula{x, f});
  for (Formula f : old.consequent) ms_erase_one(out.consequent, LabeledFormula{x, f});
  for (Formula f : now.antecedent) ms_insert(out.antecedent, LabeledFormula{x, f});
  for (Formula f : now.consequent) ms_insert(out.consequent, LabeledFormula{x, f});
  return out;
}

std::vector<Sequent> expand_labeled(Calculus c, Rule r, const RuleMeta& m, const LabeledSequent& s) {
  (void)c;
  if (r == Rule::Ir) {
    const Label& x = principal_label(m, r);
    if (!s.has_relation(x, x)) mismatch("ir: " + x + "R" + x + " not present");
    return {};
  }
  if (r == Rule::Tr) {
    const Label& x = principal_label(m, r);
    const Label& y = aux_label(m, r);
    if (!m.third) mismatch("tr: missing third label");
    const Label& z = *m.third;
    if (!s.has_relation(x, y) || !s.has_relation(y, z)) {
      mismatch("tr: " + x + "R" + y + " and " + y + "R" + z + " must both be present");
    }
    LabeledSequent p = s;
    p.add_relation(x, z);
    return {p};
  }
  const Label& x = principal_label(m, r);
  Formula f = principal(m, r);
  LabeledFormula lf{x, f};
  switch (r) {
    case Rule::BoxL:
    case Rule::FourL: {
      require_shape(r, f);
      const Label& y = aux_label(m, r);
      if (!s.has_relation(x, y)) mismatch(std::string(rule_name(r)) + ": " + x + "R" + y + " not present");
      if (!ms_contains(s.antecedent, lf)) {
        mismatch(std::string(rule_name(r)) + ": " + x + ":" + print_formula(f) + " not in antecedent");
      }
      LabeledSequent p = s;
      ms_insert(p.antecedent, LabeledFormula{y, r == Rule::BoxL ? f.sub() : f});
      return {p};
    }
    case Rule::BoxR: {
      require_shape(r, f);
      const Label& y = aux_label(m, r);
      if (!ms_contains(s.consequent, lf)) mismatch("boxR: " + x + ":" + print_formula(f) + " not in consequent");
      auto labels = s.labels();
      if (y == x || std::binary_search(labels.begin(), labels.end(), y)) {
        throw SchemaError("FreshnessViolation", "boxR: label " + y + " is not fresh");
      }
      LabeledSequent p = s;
      p.add_relation(x, y);
      ms_erase_one(p.consequent, lf);
      ms_insert(p.antecedent, LabeledFormula{y, f});
      ms_insert(p.consequent, LabeledFormula{y, f.sub()});
      return {p};
    }
    case Rule::ContractL:
    case Rule::ContractR: {
      auto& side = r == Rule::ContractL ? s.antecedent : s.consequent;
      if (!ms_contains(side, lf)) mismatch(std::string(rule_name(r)) + ": principal not present");
      LabeledSequent p = s;
      ms_insert(r == Rule::ContractL ? p.antecedent : p.consequent, lf);
      return {p};
    }
    case Rule::Cut: {
      LabeledSequent left = s, right = s;
      ms_insert(left.consequent, lf);
      ms_insert(right.antecedent, lf);
      return {left, right};
    }
    default:
      break;
  }
  GentzenSequent flat = flat_at(s, x);
  std::vector<Sequent> out;
  for (auto& g : expand_flat(r, f, flat)) out.emplace_back(with_flat(s, x, flat, g));
  return out;
}

std::vector<Sequent> expand_nested(Rule r, const RuleMeta& m, const LinearNestedSequent& s) {
  Formula f = principal(m, r);
  if (s.components.empty()) mismatch("empty nested sequent");
  const std::size_t n = s.length();
  switch (r) {
    case Rule::BoxL:
    case Rule::FourL: {
      require_shape(r, f);
      if (n < 2) mismatch(std::string(rule_name(r)) + ": needs at least two components");
      if (!ms_contains(s.components[n - 2].antecedent, f)) {
        if (found_elsewhere(s, n - 2, f)) {
          throw SchemaError("NonEndApplication", std::string(rule_name(r)) + " applied away from the end");
        }
        mismatch(std::string(rule_name(r)) + ": " + describe(f) + " not in the penultimate antecedent");
      }
      LinearNestedSequent p = s;
      ms_insert(p.end().antecedent, r == Rule::BoxL ? f.sub() : f);
      return {p};
    }
    case Rule::BoxR: {
      require_shape(r, f);
      if (!ms_contains(s.end().consequent, f)) {
        if (found_elsewhere(s, n - 1, f)) throw SchemaError("NonEndApplication", "boxR applied away from the end");
        mismatch("boxR: " + describe(f) + " not in the end consequent");
      }
      LinearNestedSequent p = s;
      ms_erase_one(p.end().consequent, f);
      GentzenSequent fresh;
      fresh.antecedent.push_back(f);
      fresh.consequent.push_back(f.sub());
      p.components.push_back(fresh);
      return {p};
    }
    default:
      break;
  }
  std::vector<GentzenSequent> flat;
  try {
    flat = expand_flat(r, f, s.end());
  } catch (const SchemaError&) {
    if (found_elsewhere(s, n - 1, f)) {
      throw SchemaError("NonEndApplication", std::string(rule_name(r)) + " applied away from the end");
    }
    throw;
  }
  std::vector<Sequent> out;
  for (auto& g : flat) {
    LinearNestedSequent p = s;
    p.end() = g;
    out.emplace_back(std::move(p));
  }
  return out;
}

template <class T>
bool sub(const std::vector<T>& small, const std::vector<T>& big) {
  return ms_includes(big, small);
}

}  // namespace

bool rule_in_calculus(Calculus c, Rule r) {
  switch (c) {
    case Calculus::GLseq:
      return r == Rule::Id || is_local(r) || r == Rule::BoxGL;
    case Calculus::K4seq:
      return r == Rule::Id || is_local(r) || r == Rule::Box4;
    case Calculus::GLcirc:
      return r == Rule::Id || is_local(r) || r == Rule::Box4 || r == Rule::Open;
    case Calculus::G3GL:
      return r == Rule::Id1 || r == Rule::Id2 || r == Rule::Ir || r == Rule::Tr || is_local(r) ||
             r == Rule::BoxL || r == Rule::BoxR;
    case Calculus::G3GLext:
      return rule_in_calculus(Calculus::G3GL, r) || r == Rule::FourL || r == Rule::Weaken ||
             r == Rule::ContractL || r == Rule::ContractR || r == Rule::Cut || r == Rule::Subst;
    case Calculus::CSGL:
    case Calculus::LNGL:
      return r == Rule::Id1 || r == Rule::Id2 || is_local(r) || is_propagation(r) || r == Rule::BoxR;
  }
  return false;
}

std::vector<Sequent> expand(Calculus c, Rule r, const RuleMeta& m, const Sequent& conclusion) {
  if (r == Rule::Weaken || r == Rule::Subst || r == Rule::Open) {
    throw SchemaError("SchemaMismatch", std::string(rule_name(r)) + " premises are not determined by the conclusion");
  }
  switch (sequent_kind(c)) {
    case SequentKind::Gentzen:
      return expand_gentzen(c, r, m, std::get<GentzenSequent>(conclusion));
    case SequentKind::Labeled:
      return expand_labeled(c, r, m, std::get<LabeledSequent>(conclusion));
    case SequentKind::Nested:
      return expand_nested(r, m, std::get<LinearNestedSequent>(conclusion));
  }
  return {};
}

bool weakens_to(const Sequent& premise, const Sequent& conclusion) {
  if (premise.index() != conclusion.index()) return false;
  if (auto* p = std::get_if<GentzenSequent>(&premise)) {
    auto& c = std::get<GentzenSequent>(conclusion);
    return sub(p->antecedent, c.antecedent) && sub(p->consequent, c.consequent);
  }
  if (auto* p = std::get_if<LabeledSequent>(&premise)) {
    auto& c = std::get<LabeledSequent>(conclusion);
    return sub(p->relations, c.relations) && sub(p->antecedent, c.antecedent) &&
           sub(p->consequent, c.consequent);
  }
  auto& p = std::get<LinearNestedSequent>(premise);
  auto& c = std::get<LinearNestedSequent>(conclusion);
  if (p.length() != c.length()) return false;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (!sub(p.components[i].antecedent, c.components[i].antecedent) ||
        !sub(p.components[i].consequent, c.components[i].consequent)) {
      return false;
    }
  }
  return true;
}

}  // namespace glwb
