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

#include "glwb/search.hpp"

#include <map>
#include <set>
#include <tuple>
#include <type_traits>
#include <unordered_set>

#include "glwb/error.hpp"
#include "glwb/rules.hpp"
#include "glwb/transform.hpp"

namespace glwb {
namespace {

struct FuelOut {};

struct GentzenHash {
  std::size_t operator()(const GentzenSequent& s) const {
    std::size_t h = 0x51ed27;
    for (Formula f : s.antecedent) h = h * 31 + f.hash();
    h = h * 131 + 7;
    for (Formula f : s.consequent) h = h * 31 + f.hash();
    return h;
  }
};

class GlseqSearch {
 public:
  explicit GlseqSearch(const SearchConfig& cfg) : cfg_(cfg) {}

  std::optional<ProofNode> prove(const GentzenSequent& s) {
    if (steps_++ >= cfg_.fuel) throw FuelOut{};
    if (failed_.count(s)) return std::nullopt;
    GentzenSequent key = s;
    if (cfg_.loop_check) {
      key.antecedent.erase(std::unique(key.antecedent.begin(), key.antecedent.end()), key.antecedent.end());
      key.consequent.erase(std::unique(key.consequent.begin(), key.consequent.end()), key.consequent.end());
      if (!path_.insert(key).second) return std::nullopt;
    }
    std::optional<ProofNode> result = attempt(s);
    if (cfg_.loop_check) path_.erase(key);
    if (!result) {
      failed_.insert(s);
      if (!saturated_) saturated_ = s;
    }
    return result;
  }

  std::size_t steps() const { return steps_; }
  const std::optional<GentzenSequent>& saturated() const { return saturated_; }

 private:
  std::optional<ProofNode> attempt(const GentzenSequent& s) {
    for (Formula f : s.antecedent) {
      if (ms_contains(s.consequent, f)) return node(Rule::Id, s, f, {});
    }
    auto find = [](const std::vector<Formula>& side, Connective k) -> std::optional<Formula> {
      for (Formula f : side) {
        if (f.kind() == k) return f;
      }
      return std::nullopt;
    };
    std::pair<Rule, std::optional<Formula>> local[] = {
        {Rule::NegL, find(s.antecedent, Connective::Not)},
        {Rule::NegR, find(s.consequent, Connective::Not)},
        {Rule::OrR, find(s.consequent, Connective::Or)},
        {Rule::OrL, find(s.antecedent, Connective::Or)},
    };
    for (auto& [rule, f] : local) {
      if (!f) continue;
      RuleMeta m;
      m.formula = *f;
      std::vector<ProofNode> prems;
      for (auto& p : expand(Calculus::GLseq, rule, m, s)) {
        auto sub = prove(std::get<GentzenSequent>(p));
        if (!sub) return std::nullopt;
        prems.push_back(std::move(*sub));
      }
      return node(rule, s, *f, std::move(prems));
    }
    std::vector<Formula> boxes;
    for (Formula f : s.antecedent) {
      if (f.is_box() && (!cfg_.set_mode || boxes.empty() || boxes.back() != f)) boxes.push_back(f);
    }
    Formula last;
    for (Formula f : s.consequent) {
      if (!f.is_box() || f == last) continue;
      last = f;
      RuleMeta m;
      m.formula = f;
      m.boxes = boxes;
      auto prem = std::get<GentzenSequent>(expand(Calculus::GLseq, Rule::BoxGL, m, s)[0]);
      if (auto sub = prove(prem)) {
        ProofNode n = node(Rule::BoxGL, s, f, {});
        n.meta.boxes = boxes;
        n.premises.push_back(std::move(*sub));
        return n;
      }
    }
    return std::nullopt;
  }

  static ProofNode node(Rule r, const GentzenSequent& s, Formula f, std::vector<ProofNode> prems) {
    ProofNode n;
    n.rule = r;
    n.conclusion = s;
    n.meta.formula = f;
    n.premises = std::move(prems);
    return n;
  }

  const SearchConfig& cfg_;
  std::size_t steps_ = 0;
  std::unordered_set<GentzenSequent, GentzenHash> failed_;
  std::unordered_set<GentzenSequent, GentzenHash> path_;
  std::optional<GentzenSequent> saturated_;
};

struct CsglState {
  LabeledSequent seq;
  std::vector<Label> order;  // labels by creation
  // Propagations already made along this branch, as (rule, x, []phi, y).
  std::set<std::tuple<Rule, Label, Formula, Label>> propagated;
};

class CsglSearch {
 public:
  explicit CsglSearch(const SearchConfig& cfg) : cfg_(cfg) {}

  std::optional<ProofNode> prove(const CsglState& st) {
    if (steps_++ >= cfg_.fuel) throw FuelOut{};
    if (auto n = initial(st)) return n;
    std::optional<std::pair<Rule, RuleMeta>> step =
        cfg_.order == SearchOrder::Layered ? layered(st) : local_last(st);
    if (!step) {
      if (!saturated_) saturated_ = st.seq;
      return std::nullopt;
    }
    auto [rule, meta] = *step;
    ProofNode n;
    n.rule = rule;
    n.conclusion = st.seq;
    n.meta = meta;
    for (auto& p : expand(Calculus::CSGL, rule, meta, st.seq)) {
      CsglState next{std::get<LabeledSequent>(p), st.order, st.propagated};
      if (rule == Rule::BoxR) next.order.push_back(*meta.aux);
      if (is_propagation(rule)) next.propagated.emplace(rule, *meta.label, *meta.formula, *meta.aux);
      auto sub = prove(next);
      if (!sub) return std::nullopt;
      n.premises.push_back(std::move(*sub));
    }
    return n;
  }

  std::size_t steps() const { return steps_; }
  const std::optional<LabeledSequent>& saturated() const { return saturated_; }

 private:
  static std::optional<ProofNode> initial(const CsglState& st) {
    for (const Label& x : st.order) {
      for (const auto& lf : st.seq.antecedent) {
        if (lf.label != x || !(lf.formula.is_atom() || lf.formula.is_box())) continue;
        if (!ms_contains(st.seq.consequent, lf)) continue;
        ProofNode n;
        n.rule = lf.formula.is_atom() ? Rule::Id1 : Rule::Id2;
        n.conclusion = st.seq;
        n.meta.label = x;
        n.meta.formula = lf.formula;
        return n;
      }
    }
    return std::nullopt;
  }

  static std::optional<std::pair<Rule, RuleMeta>> local_at(const CsglState& st, const Label& x) {
    auto find = [&](const std::vector<LabeledFormula>& side, Connective k) -> std::optional<Formula> {
      for (const auto& lf : side) {
        if (lf.label == x && lf.formula.kind() == k) return lf.formula;
      }
      return std::nullopt;
    };
    std::pair<Rule, std::optional<Formula>> local[] = {
        {Rule::NegL, find(st.seq.antecedent, Connective::Not)},
        {Rule::NegR, find(st.seq.consequent, Connective::Not)},
        {Rule::OrR, find(st.seq.consequent, Connective::Or)},
        {Rule::OrL, find(st.seq.antecedent, Connective::Or)},
    };
    for (auto& [rule, f] : local) {
      if (f) return std::make_pair(rule, meta(x, *f));
    }
    return std::nullopt;
  }

  static std::optional<std::pair<Rule, RuleMeta>> propagate_from(const CsglState& st, const Label& x) {
    for (const Label& y : tree_children(st.seq, x)) {
      for (const auto& lf : st.seq.antecedent) {
        if (lf.label != x || !lf.formula.is_box()) continue;
        RuleMeta m = meta(x, lf.formula);
        m.aux = y;
        for (Rule r : {Rule::FourL, Rule::BoxL}) {
          LabeledFormula added{y, r == Rule::FourL ? lf.formula : lf.formula.sub()};
          if (st.propagated.count({r, x, lf.formula, y}) || ms_contains(st.seq.antecedent, added)) continue;
          return std::make_pair(r, m);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<Rule, RuleMeta>> box_right_at(const CsglState& st, const Label& x) {
    for (const auto& lf : st.seq.consequent) {
      if (lf.label != x || !lf.formula.is_box()) continue;
      RuleMeta m = meta(x, lf.formula);
      m.aux = fresh(st);
      return std::make_pair(Rule::BoxR, m);
    }
    return std::nullopt;
  }

  std::optional<std::pair<Rule, RuleMeta>> layered(const CsglState& st) {
    for (const Label& x : st.order) {
      if (auto s = local_at(st, x)) return s;
    }
    for (const Label& x : st.order) {
      if (auto s = propagate_from(st, x)) return s;
    }
    for (const Label& x : st.order) {
      if (auto s = box_right_at(st, x)) return s;
    }
    return std::nullopt;
  }

  std::optional<std::pair<Rule, RuleMeta>> local_last(const CsglState& st) {
    for (const Label& x : st.order) {
      if (auto s = box_right_at(st, x)) return s;
      if (auto s = local_at(st, x)) return s;
      if (auto s = propagate_from(st, x)) return s;
    }
    return std::nullopt;
  }

  Label fresh(const CsglState& st) {
    for (;;) {
      Label y = "y" + std::to_string(++counter_);
      if (std::find(st.order.begin(), st.order.end(), y) == st.order.end()) return y;
    }
  }

  static RuleMeta meta(const Label& x, Formula f) {
    RuleMeta m;
    m.label = x;
    m.formula = f;
    return m;
  }

  const SearchConfig& cfg_;
  std::size_t steps_ = 0;
  std::size_t counter_ = 0;
  std::optional<LabeledSequent> saturated_;
};

std::vector<Label> creation_order(const LabeledSequent& s) {
  std::vector<Label> order{tree_root(s)};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Label& c : tree_children(s, order[i])) order.push_back(c);
  }
  return order;
}

// Oracle verdict on `reading`, with atoms foreign to `source` (the
// placeholder of empty conjunctions) dropped from the countermodel.
OracleVerdict hint(Formula reading, const std::set<std::string>& source) {
  OracleVerdict v = oracle_validity(reading);
  if (!v.countermodel) return v;
  const Model& m = *v.countermodel;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.related(i, j)) edges.emplace_back(m.worlds()[i], m.worlds()[j]);
    }
  }
  std::map<std::string, std::vector<std::string>> val;
  for (const auto& [atom, bits] : m.valuation()) {
    if (!source.count(atom)) continue;
    auto& ws = val[atom];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (bits[i]) ws.push_back(m.worlds()[i]);
    }
  }
  v.countermodel = Model::build(m.worlds(), edges, val);
  return v;
}

template <typename Seq>
std::set<std::string> atoms_in(const Seq& s) {
  std::set<std::string> out;
  for (const auto* side : {&s.antecedent, &s.consequent}) {
    for (const auto& x : *side) {
      if constexpr (std::is_same_v<Seq, GentzenSequent>) {
        for (auto& a : atoms_of(x)) out.insert(a);
      } else {
        for (auto& a : atoms_of(x.formula)) out.insert(a);
      }
    }
  }
  return out;
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Proved:
      return "Proved";
    case Outcome::NotProved:
      return "NotProved";
    case Outcome::FuelExhausted:
      return "FuelExhausted";
  }
  return "?";
}

SearchResult decide_glseq(const GentzenSequent& s, const SearchConfig& cfg) {
  GentzenSequent input = s;
  input.normalize();
  GlseqSearch search(cfg);
  SearchResult r;
  try {
    auto root = search.prove(input);
    if (root) {
      r.outcome = Outcome::Proved;
      r.proof = Proof{Calculus::GLseq, std::move(*root)};
    } else {
      r.outcome = Outcome::NotProved;
      if (search.saturated()) r.saturated = *search.saturated();
      if (cfg.oracle_hint) r.hint = hint(gentzen_interpretation(input), atoms_in(input));
    }
  } catch (const FuelOut&) {
    r.outcome = Outcome::FuelExhausted;
  }
  r.steps = search.steps();
  return r;
}

SearchResult decide_csgl(const LabeledSequent& s, const SearchConfig& cfg) {
  LabeledSequent input = s;
  input.normalize();
  CsglState st{input, creation_order(input), {}};
  CsglSearch search(cfg);
  SearchResult r;
  try {
    auto root = search.prove(st);
    if (root) {
      r.outcome = Outcome::Proved;
      r.proof = Proof{Calculus::CSGL, std::move(*root)};
      canonicalize_labels(*r.proof);
    } else {
      r.outcome = Outcome::NotProved;
      if (search.saturated()) r.saturated = *search.saturated();
      if (cfg.oracle_hint) r.hint = hint(tree_interpretation(input), atoms_in(input));
    }
  } catch (const FuelOut&) {
    r.outcome = Outcome::FuelExhausted;
  }
  r.steps = search.steps();
  return r;
}

SearchResult decide_glseq(Formula f, const SearchConfig& cfg) {
  GentzenSequent s;
  s.consequent.push_back(f);
  return decide_glseq(s, cfg);
}

SearchResult decide_csgl(Formula f, const SearchConfig& cfg) {
  LabeledSequent s;
  s.consequent.push_back({"x", f});
  return decide_csgl(s, cfg);
}

}  // namespace glwb
