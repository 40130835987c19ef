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

#include "glwb/checkers.hpp"
#include "glwb/error.hpp"
#include "glwb/rules.hpp"
#include "glwb/transform.hpp"
#include "transform_internal.hpp"

namespace glwb {
namespace {

using detail::make_node;

struct Lin {
  ProofNode node;
  std::vector<Label> path;
};

bool on_path(const std::vector<Label>& path, const Label& x) {
  return std::find(path.begin(), path.end(), x) != path.end();
}

[[noreturn]] void not_end(const ProofNode& n) {
  throw PassError("NotEndActive", std::string(rule_name(n.rule)) + " at " + n.meta.label.value_or("?") +
                                      " is not at the end of the path");
}

RuleMeta nested_meta(const ProofNode& n) {
  RuleMeta m;
  m.formula = n.meta.formula;
  return m;
}

Lin lin(const ProofNode& n) {
  const LabeledSequent& c = n.labeled();
  const Label& x = *n.meta.label;
  switch (n.rule) {
    case Rule::Id1:
    case Rule::Id2: {
      std::vector<Label> path = path_to(c, x);
      return {make_node(n.rule, project(c, path), nested_meta(n)), path};
    }
    case Rule::NegL:
    case Rule::NegR:
    case Rule::OrR: {
      Lin sub = lin(n.premises[0]);
      if (!on_path(sub.path, x)) return sub;
      if (sub.path.back() != x) not_end(n);
      ProofNode out = make_node(n.rule, project(c, sub.path), nested_meta(n));
      out.premises.push_back(std::move(sub.node));
      return {std::move(out), std::move(sub.path)};
    }
    case Rule::OrL: {
      Lin left = lin(n.premises[0]);
      Lin right = lin(n.premises[1]);
      bool l_on = on_path(left.path, x), r_on = on_path(right.path, x);
      if (!l_on) return left;
      if (!r_on) return right;
      if (left.path.back() != x || right.path != left.path) not_end(n);
      ProofNode out = make_node(n.rule, project(c, left.path), nested_meta(n));
      out.premises.push_back(std::move(left.node));
      out.premises.push_back(std::move(right.node));
      return {std::move(out), std::move(left.path)};
    }
    case Rule::BoxL:
    case Rule::FourL: {
      Lin sub = lin(n.premises[0]);
      const Label& y = *n.meta.aux;
      if (!on_path(sub.path, y)) return sub;
      std::size_t k = sub.path.size();
      if (k < 2 || sub.path[k - 1] != y || sub.path[k - 2] != x) not_end(n);
      ProofNode out = make_node(n.rule, project(c, sub.path), nested_meta(n));
      out.premises.push_back(std::move(sub.node));
      return {std::move(out), std::move(sub.path)};
    }
    case Rule::BoxR: {
      Lin sub = lin(n.premises[0]);
      const Label& y = *n.meta.aux;
      if (on_path(sub.path, y)) {
        std::size_t k = sub.path.size();
        if (k < 2 || sub.path[k - 1] != y || sub.path[k - 2] != x) not_end(n);
        sub.path.pop_back();
        ProofNode out = make_node(Rule::BoxR, project(c, sub.path), nested_meta(n));
        out.premises.push_back(std::move(sub.node));
        return {std::move(out), std::move(sub.path)};
      }
      auto it = std::find(sub.path.begin(), sub.path.end(), x);
      if (it == sub.path.end()) return sub;
      LinearNestedSequent extra;
      extra.components.resize(static_cast<std::size_t>(it - sub.path.begin()) + 1);
      extra.components.back().consequent.push_back(*n.meta.formula);
      sub.node = weaken(Calculus::LNGL, sub.node, extra);
      return sub;
    }
    default:
      throw PassError("WrongCalculus", std::string(rule_name(n.rule)) + " is not a csgl rule");
  }
}

std::optional<Address> find_in_segment(const ProofNode& from, const Address& base, Rule rule) {
  std::deque<std::pair<const ProofNode*, Address>> queue{{&from, base}};
  while (!queue.empty()) {
    auto [n, at] = queue.front();
    queue.pop_front();
    if (n->rule == rule) return at;
    if (n->rule == Rule::BoxR) continue;
    for (std::size_t i = 0; i < n->premises.size(); ++i) {
      Address a = at;
      a.push_back(i);
      queue.emplace_back(&n->premises[i], std::move(a));
    }
  }
  return std::nullopt;
}

// Gathers the blocks of `rule` directly above `at` into one chain.
std::size_t gather(ProofNode& root, const Address& box, Rule rule, std::size_t& steps, std::size_t guard) {
  Address top = box;
  top.push_back(0);
  while (node_at(root, top).rule == Rule::FourL || (rule == Rule::BoxL && node_at(root, top).rule == Rule::BoxL)) {
    top.push_back(0);
  }
  std::size_t moved = 0;
  for (;;) {
    const ProofNode& above = node_at(root, top);
    if (above.rule == Rule::BoxR) break;
    auto found = find_in_segment(above, top, rule);
    if (!found) break;
    Address at = *found;
    while (at.size() > top.size()) {
      Address lower(at.begin(), at.end() - 1);
      ProofNode& l = node_at(root, lower);
      l = detail::permute_node(Calculus::LNGL, l, at.back());
      at = lower;
      if (++steps > guard) throw PassError("NonTermination", "normalization budget exhausted");
    }
    top.push_back(0);
    ++moved;
  }
  return moved;
}

}  // namespace

Linearization linearize(const Proof& csgl) {
  if (csgl.calculus != Calculus::CSGL) throw PassError("WrongCalculus", "linearize expects a csgl proof");
  Lin l = lin(csgl.root);
  Proof out{Calculus::LNGL, std::move(l.node)};
  CheckReport rep = check_lngl(out);
  if (!rep.accepted) throw PassError("InternalError", "linearization is not a valid lngl proof: " + rep.text());
  return {std::move(out), std::move(l.path)};
}

PassResult normalize_lngl(const Proof& lngl) {
  if (lngl.calculus != Calculus::LNGL) throw PassError("WrongCalculus", "normalize expects an lngl proof");
  PassResult r{lngl, {"normal"}};
  r.report.nodes_in = node_count(lngl.root);
  r.report.height_in = height(lngl.root);
  const std::size_t guard = r.report.nodes_in * r.report.nodes_in * 4 + 16;
  // Top-down over boxR nodes; permutations above one boxR leave the
  // addresses of lower ones intact.
  std::deque<Address> pending;
  auto enqueue_boxes = [&](const Address& from) {
    std::deque<Address> q{from};
    while (!q.empty()) {
      Address at = q.front();
      q.pop_front();
      const ProofNode& n = node_at(r.proof.root, at);
      if (n.rule == Rule::BoxR && at != from) {
        pending.push_back(at);
        continue;
      }
      for (std::size_t i = 0; i < n.premises.size(); ++i) {
        Address a = at;
        a.push_back(i);
        q.push_back(std::move(a));
      }
    }
  };
  if (r.proof.root.rule == Rule::BoxR) {
    pending.push_back({});
  } else {
    enqueue_boxes({});
  }
  while (!pending.empty()) {
    Address box = pending.front();
    pending.pop_front();
    gather(r.proof.root, box, Rule::FourL, r.report.steps, guard);
    gather(r.proof.root, box, Rule::BoxL, r.report.steps, guard);
    enqueue_boxes(box);
  }
  r.report.nodes_out = node_count(r.proof.root);
  r.report.height_out = height(r.proof.root);
  CheckReport nf = normal_form_report(r.proof);
  if (!nf.accepted) throw PassError("InternalError", "normalization left violations: " + nf.text());
  return r;
}

}  // namespace glwb
