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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glwb/formula.hpp"
#include "glwb/sequent.hpp"

namespace glwb {

enum class Calculus { GLseq, K4seq, G3GL, G3GLext, CSGL, LNGL, GLcirc };

enum class Rule {
  Id,         // Gentzen-style: phi on both sides
  Id1,        // labeled/nested: atom on both sides
  Id2,        // labeled/nested: boxed formula on both sides
  Ir,         // xRx
  Tr,         // transitivity
  NegL,
  NegR,
  OrL,
  OrR,
  BoxL,
  BoxR,
  FourL,
  BoxGL,
  Box4,
  Weaken,
  ContractL,
  ContractR,
  Cut,
  Subst,
  Open,       // unproved leaf, optionally back-linked
};

const char* calculus_name(Calculus c);
std::optional<Calculus> calculus_from_name(std::string_view s);
const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view s);

enum class SequentKind { Gentzen, Labeled, Nested };
SequentKind sequent_kind(Calculus c);

bool is_local(Rule r);        // NegL, NegR, OrL, OrR
bool is_propagation(Rule r);  // BoxL, FourL
bool is_initial(Rule r);      // Id, Id1, Id2, Ir

// Rule instance data. Principal occurrences are identified by value; the
// checker locates them in the conclusion.
struct RuleMeta {
  std::optional<Label> label;    // principal label; target x in Subst
  std::optional<Formula> formula;
  std::optional<Label> aux;      // propagation target; BoxR fresh label; Subst source
  std::optional<Label> third;    // Tr: z in xRy, yRz
  std::vector<Formula> boxes;    // BoxGL/Box4: the boxed context
  friend bool operator==(const RuleMeta&, const RuleMeta&) = default;
};

using Sequent = std::variant<GentzenSequent, LabeledSequent, LinearNestedSequent>;
std::string print_sequent(const Sequent& s);
Sequent parse_sequent(SequentKind kind, std::string_view text);

// Premise-index path from the root.
using Address = std::vector<std::size_t>;
std::string print_address(const Address& a);
Address parse_address(std::string_view s);

struct ProofNode {
  Rule rule = Rule::Open;
  Sequent conclusion;
  RuleMeta meta;
  std::vector<ProofNode> premises;
  std::optional<Address> backlink;  // Open leaves of cyclic derivations

  const GentzenSequent& gentzen() const { return std::get<GentzenSequent>(conclusion); }
  const LabeledSequent& labeled() const { return std::get<LabeledSequent>(conclusion); }
  const LinearNestedSequent& nested() const { return std::get<LinearNestedSequent>(conclusion); }
};

struct Proof {
  Calculus calculus = Calculus::GLseq;
  ProofNode root;
};

// A cyclic derivation is a GLcirc proof whose Open leaves carry back-links.
using CyclicDerivation = Proof;

// A maximal run of rules of one kind in a nested proof, located by the
// address of its lowest node.
struct Block {
  Rule rule;
  Address start;
  std::size_t length = 0;
};

std::size_t height(const ProofNode& n);
std::size_t node_count(const ProofNode& n);
const ProofNode& node_at(const ProofNode& root, const Address& a);
ProofNode& node_at(ProofNode& root, const Address& a);
// Pre-order traversal with addresses.
template <class F>
void for_each_node(const ProofNode& n, F&& f, Address& at) {
  f(n, at);
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    at.push_back(i);
    for_each_node(n.premises[i], f, at);
    at.pop_back();
  }
}
template <class F>
void for_each_node(const ProofNode& n, F&& f) {
  Address at;
  for_each_node(n, f, at);
}

// Proof file format: first line "calculus: <id>", then one s-expression
// (rule <name> (concl "...") (meta k=v ...) (prems ...)) or
// (open (concl "...") (backlink a/b/c)).
std::string write_proof(const Proof& p);
Proof read_proof(std::string_view text);  // throws Error("ProofSyntax")

}  // namespace glwb
