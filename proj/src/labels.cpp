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

#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

#include "glwb/error.hpp"
#include "glwb/transform.hpp"
#include "transform_internal.hpp"

namespace glwb {
namespace detail {

Label NameGen::next() {
  for (;;) {
    Label l = "y" + std::to_string(++counter_);
    if (used_.insert(l).second) return l;
  }
}

LabeledSequent map_labels(const LabeledSequent& s, const std::function<Label(const Label&)>& f) {
  LabeledSequent out;
  out.relations.reserve(s.relations.size());
  for (const auto& [a, b] : s.relations) out.relations.emplace_back(f(a), f(b));
  for (const auto& lf : s.antecedent) out.antecedent.push_back({f(lf.label), lf.formula});
  for (const auto& lf : s.consequent) out.consequent.push_back({f(lf.label), lf.formula});
  out.normalize();
  return out;
}

bool binds(const ProofNode& n) { return (n.rule == Rule::BoxR || n.rule == Rule::Subst) && n.meta.aux; }

void rename_free(ProofNode& n, const Label& from, const Label& to, NameGen& gen) {
  if (from == to) return;
  auto swap = [&](const Label& l) { return l == from ? to : l; };
  if (auto* s = std::get_if<LabeledSequent>(&n.conclusion)) *s = map_labels(*s, swap);
  if (n.meta.label && *n.meta.label == from) n.meta.label = to;
  if (n.meta.third && *n.meta.third == from) n.meta.third = to;
  if (binds(n)) {
    const Label bound = *n.meta.aux;
    if (bound == from) return;
    if (bound == to) {
      Label nb = gen.next();
      for (auto& p : n.premises) rename_free(p, bound, nb, gen);
      n.meta.aux = nb;
    }
  } else if (n.meta.aux && *n.meta.aux == from) {
    n.meta.aux = to;
  }
  for (auto& p : n.premises) rename_free(p, from, to, gen);
}

}  // namespace detail

using detail::NameGen;

std::set<Label> labels_in(const ProofNode& n) {
  std::set<Label> out;
  for_each_node(n, [&](const ProofNode& m, const Address&) {
    if (auto* s = std::get_if<LabeledSequent>(&m.conclusion)) {
      for (auto& l : s->labels()) out.insert(l);
    }
    for (const auto* l : {&m.meta.label, &m.meta.aux, &m.meta.third}) {
      if (*l) out.insert(**l);
    }
  });
  return out;
}

void rename_free(ProofNode& n, const Label& from, const Label& to) {
  std::set<Label> used = labels_in(n);
  used.insert(from);
  used.insert(to);
  NameGen gen(std::move(used));
  detail::rename_free(n, from, to, gen);
}

void canonicalize_labels(Proof& p) {
  if (sequent_kind(p.calculus) != SequentKind::Labeled) return;
  std::set<Label> reserved;
  for (auto& l : p.root.labeled().labels()) reserved.insert(l);
  NameGen gen(reserved, 0);
  std::unordered_map<const ProofNode*, Label> names;
  std::deque<const ProofNode*> queue{&p.root};
  while (!queue.empty()) {
    const ProofNode* n = queue.front();
    queue.pop_front();
    if (detail::binds(*n)) names[n] = gen.next();
    for (const auto& q : n->premises) queue.push_back(&q);
  }
  using Env = std::map<Label, Label>;
  std::function<void(ProofNode&, const Env&)> apply = [&](ProofNode& n, const Env& env) {
    auto look = [&](const Label& l) {
      auto it = env.find(l);
      return it == env.end() ? l : it->second;
    };
    auto fresh_name = names.find(&n);
    n.conclusion = detail::map_labels(n.labeled(), look);
    if (n.meta.label) n.meta.label = look(*n.meta.label);
    if (n.meta.third) n.meta.third = look(*n.meta.third);
    if (fresh_name != names.end()) {
      Env inner = env;
      inner[*n.meta.aux] = fresh_name->second;
      n.meta.aux = fresh_name->second;
      for (auto& q : n.premises) apply(q, inner);
      return;
    }
    if (n.meta.aux) n.meta.aux = look(*n.meta.aux);
    for (auto& q : n.premises) apply(q, env);
  };
  apply(p.root, {});
}

ProofNode substitute(Calculus c, const ProofNode& p, const Label& from, const Label& to) {
  if (sequent_kind(c) != SequentKind::Labeled) throw PassError("NotApplicable", "substitution needs labels");
  ProofNode out = p;
  rename_free(out, from, to);
  return out;
}

}  // namespace glwb
