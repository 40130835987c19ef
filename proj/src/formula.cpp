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

#include "glwb/formula.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_set>

#include "glwb/error.hpp"

namespace glwb {
namespace detail {

struct FormulaNode {
  Connective kind;
  std::string name;
  const FormulaNode* left = nullptr;
  const FormulaNode* right = nullptr;
  std::size_t weight = 1;
  std::size_t hash = 0;
};

}  // namespace detail

namespace {

using detail::FormulaNode;

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct NodeHash {
  std::size_t operator()(const std::unique_ptr<FormulaNode>& n) const { return n->hash; }
};

struct NodeEq {
  bool operator()(const std::unique_ptr<FormulaNode>& a,
                  const std::unique_ptr<FormulaNode>& b) const {
    return a->kind == b->kind && a->left == b->left && a->right == b->right &&
           a->name == b->name;
  }
};

class InternTable {
 public:
  const FormulaNode* intern(Connective kind, std::string name, const FormulaNode* left,
                            const FormulaNode* right) {
    auto node = std::make_unique<FormulaNode>();
    node->kind = kind;
    node->name = std::move(name);
    node->left = left;
    node->right = right;
    node->weight = 1 + (left ? left->weight : 0) + (right ? right->weight : 0);
    std::size_t h = mix(static_cast<std::size_t>(kind) + 1, std::hash<std::string>{}(node->name));
    h = mix(h, left ? left->hash : 0);
    h = mix(h, right ? right->hash : 0);
    node->hash = h;
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = nodes_.insert(std::move(node));
    return it->get();
  }

 private:
  std::mutex mu_;
  std::unordered_set<std::unique_ptr<FormulaNode>, NodeHash, NodeEq> nodes_;
};

InternTable& table() {
  static auto* t = new InternTable();
  return *t;
}

bool is_atom_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_atom_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::strong_ordering compare_nodes(const FormulaNode* a, const FormulaNode* b) {
  if (a == b) return std::strong_ordering::equal;
  if (a->kind != b->kind) return a->kind <=> b->kind;
  switch (a->kind) {
    case Connective::Atom:
      return a->name.compare(b->name) <=> 0;
    case Connective::Not:
    case Connective::Box:
      return compare_nodes(a->left, b->left);
    case Connective::Or: {
      auto c = compare_nodes(a->left, b->left);
      if (c != 0) return c;
      return compare_nodes(a->right, b->right);
    }
  }
  return std::strong_ordering::equal;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implication(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    for (;;) {
      skip_ws();
      // "|-" is the turnstile, never a disjunction.
      if (text_.substr(pos_, 2) == "|-") break;
      if (!accept("|")) break;
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    if (accept("~")) return Formula::negation(unary());
    if (accept("[]")) return Formula::box(unary());
    return primary();
  }

  Formula primary() {
    skip_ws();
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) throw SyntaxError(pos_, "')'");
      return f;
    }
    if (pos_ < text_.size() && is_atom_start(text_[pos_])) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
      return Formula::atom(text_.substr(start, pos_ - start));
    }
    throw SyntaxError(pos_, "formula");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(std::string& out, Formula f, bool unary_context) {
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Not:
      out += "~";
      print_into(out, f.sub(), true);
      return;
    case Connective::Box:
      out += "[]";
      print_into(out, f.sub(), true);
      return;
    case Connective::Or:
      if (unary_context) out += "(";
      print_into(out, f.left(), false);
      out += " | ";
      if (f.right().is_or()) {
        out += "(";
        print_into(out, f.right(), false);
        out += ")";
      } else {
        print_into(out, f.right(), true);
      }
      if (unary_context) out += ")";
      return;
  }
}

void collect(Formula f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Connective::Atom:
      return;
    case Connective::Not:
    case Connective::Box:
      collect(f.sub(), out);
      return;
    case Connective::Or:
      collect(f.left(), out);
      collect(f.right(), out);
      return;
  }
}

}  // namespace

Formula Formula::atom(std::string_view name) {
  if (name.empty() || !is_atom_start(name[0]) ||
      !std::all_of(name.begin(), name.end(), is_atom_char)) {
    throw SyntaxError(0, "atom name");
  }
  return Formula(table().intern(Connective::Atom, std::string(name), nullptr, nullptr));
}

Formula Formula::negation(Formula sub) {
  return Formula(table().intern(Connective::Not, {}, sub.node_, nullptr));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(table().intern(Connective::Or, {}, left.node_, right.node_));
}

Formula Formula::box(Formula sub) {
  return Formula(table().intern(Connective::Box, {}, sub.node_, nullptr));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return negation(disjunction(negation(left), negation(right)));
}

Formula Formula::implication(Formula left, Formula right) {
  return disjunction(negation(left), right);
}

Connective Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::sub() const { return Formula(node_->left); }
Formula Formula::left() const { return Formula(node_->left); }
Formula Formula::right() const { return Formula(node_->right); }
std::size_t Formula::weight() const noexcept { return node_->weight; }
std::size_t Formula::hash() const noexcept { return node_ ? node_->hash : 0; }

std::strong_ordering operator<=>(Formula a, Formula b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  return compare_nodes(a.node_, b.node_);
}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(Formula f) {
  std::string out;
  print_into(out, f, false);
  return out;
}

Closure closure(Formula f) {
  std::set<Formula> subs;
  collect(f, subs);
  Closure c;
  c.subformulas.assign(subs.begin(), subs.end());
  for (Formula g : c.subformulas) {
    if (g.is_box()) c.boxed.push_back(g);
  }
  c.weight = f.weight();
  return c;
}

std::vector<std::string> atoms_of(Formula f) {
  std::vector<std::string> out;
  for (Formula g : closure(f).subformulas) {
    if (g.is_atom()) out.push_back(g.name());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace glwb
