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
namespace detail {

ProofNode permute_node(Calculus c, const ProofNode& lower, std::size_t j) {
  const ProofNode& upper = lower.premises.at(j);
  auto not_permutable = [&](const std::string& why) {
    return PassError("NotPermutable", std::string(rule_name(upper.rule)) + " over " + rule_name(lower.rule) + ": " + why);
  };
  if (upper.rule == Rule::Open || is_initial(upper.rule)) throw not_permutable("upper rule has no premises");
  std::vector<Sequent> bottom;
  try {
    bottom = expand(c, upper.rule, upper.meta, lower.conclusion);
  } catch (const SchemaError& e) {
    throw not_permutable(e.what());
  }
  ProofNode out = make_node(upper.rule, lower.conclusion, upper.meta);
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    std::vector<Sequent> middle;
    try {
      middle = expand(c, lower.rule, lower.meta, bottom[i]);
    } catch (const SchemaError& e) {
      throw not_permutable(e.what());
    }
    ProofNode mid = make_node(lower.rule, bottom[i], lower.meta);
    for (std::size_t l = 0; l < middle.size(); ++l) {
      ProofNode child = l == j ? upper.premises[i] : apply_inverse(c, lower.premises[l], upper.rule, upper.meta, i);
      if (!(child.conclusion == middle[l])) throw not_permutable("premise " + std::to_string(l) + " does not line up");
      mid.premises.push_back(std::move(child));
    }
    out.premises.push_back(std::move(mid));
  }
  return out;
}

}  // namespace detail

namespace {

bool end_active_at(const ProofNode& n) {
  if (n.rule == Rule::BoxR || n.rule == Rule::Open || !n.meta.label) return true;
  const LabeledSequent& s = n.labeled();
  if (is_propagation(n.rule)) return n.meta.aux && is_pre_leaf(s, *n.meta.label) && is_leaf(s, *n.meta.aux);
  return is_leaf(s, *n.meta.label);
}

// Breadth-first: lowest, then leftmost.
std::optional<Address> find_first(const ProofNode& root, const std::function<bool(const ProofNode&)>& pred) {
  std::deque<std::pair<const ProofNode*, Address>> queue{{&root, {}}};
  while (!queue.empty()) {
    auto [n, at] = queue.front();
    queue.pop_front();
    if (pred(*n)) return at;
    for (std::size_t i = 0; i < n->premises.size(); ++i) {
      Address a = at;
      a.push_back(i);
      queue.emplace_back(&n->premises[i], std::move(a));
    }
  }
  return std::nullopt;
}

}  // namespace

std::string PassReport::line() const {
  return pass + ": nodes " + std::to_string(nodes_in) + " -> " + std::to_string(nodes_out) + ", height " +
         std::to_string(height_in) + " -> " + std::to_string(height_out) + ", steps " + std::to_string(steps);
}

Proof permute_down(const Proof& p, const Address& upper) {
  if (upper.empty()) throw PassError("NotPermutable", "the root has no rule below it");
  Address lower(upper.begin(), upper.end() - 1);
  Proof out = p;
  ProofNode& l = node_at(out.root, lower);
  bool duplicates = l.rule == Rule::BoxR && node_at(p.root, upper).premises.size() > 1;
  l = detail::permute_node(p.calculus, node_at(p.root, lower), upper.back());
  if (duplicates) canonicalize_labels(out);
  return out;
}

PassResult to_end_active(const Proof& csgl) {
  if (csgl.calculus != Calculus::CSGL) throw PassError("WrongCalculus", "to_end_active expects a csgl proof");
  PassResult r{csgl, {"end-active"}};
  r.report.nodes_in = node_count(csgl.root);
  r.report.height_in = height(csgl.root);
  const std::size_t guard = r.report.nodes_in * r.report.nodes_in + 1;
  auto offending = [](const ProofNode& n) {
    return (is_local(n.rule) || is_propagation(n.rule)) && !end_active_at(n);
  };
  while (auto at = find_first(r.proof.root, offending)) {
    if (++r.report.steps > guard) throw PassError("NonTermination", "permutation budget exhausted");
    r.proof = permute_down(r.proof, *at);
  }
  // Identities above non-leaf labels: the rule below already closes.
  auto stranded = [](const ProofNode& n) {
    return (n.rule == Rule::Id1 || n.rule == Rule::Id2) && !end_active_at(n);
  };
  while (auto at = find_first(r.proof.root, stranded)) {
    if (at->empty()) throw PassError("InternalError", "root identity is not end-active");
    if (++r.report.steps > guard) throw PassError("NonTermination", "identity budget exhausted");
    Address below(at->begin(), at->end() - 1);
    ProofNode id = node_at(r.proof.root, *at);
    ProofNode& parent = node_at(r.proof.root, below);
    try {
      expand(Calculus::CSGL, id.rule, id.meta, parent.conclusion);
    } catch (const SchemaError& e) {
      throw PassError("InternalError", std::string("cannot lower identity: ") + e.what());
    }
    id.conclusion = parent.conclusion;
    parent = std::move(id);
  }
  canonicalize_labels(r.proof);
  r.report.nodes_out = node_count(r.proof.root);
  r.report.height_out = height(r.proof.root);
  CheckReport ea = end_active_report(r.proof);
  if (!ea.accepted) throw PassError("InternalError", "result is not end-active: " + ea.text());
  return r;
}

}  // namespace glwb
