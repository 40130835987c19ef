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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace glwb {

// Constructor order doubles as the structural order.
enum class Connective : std::uint8_t { Atom, Not, Or, Box };

namespace detail {
struct FormulaNode;
}

// Immutable, hash-consed modal formula. Copies are pointer-sized and
// equality is pointer equality.
class Formula {
 public:
  Formula() = default;

  static Formula atom(std::string_view name);
  static Formula negation(Formula sub);
  static Formula disjunction(Formula left, Formula right);
  static Formula box(Formula sub);
  // Derived connectives, expanded on construction.
  static Formula conjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);

  bool valid() const noexcept { return node_ != nullptr; }
  Connective kind() const noexcept;
  const std::string& name() const;  // atoms only
  Formula sub() const;              // Not, Box
  Formula left() const;             // Or
  Formula right() const;            // Or
  std::size_t weight() const noexcept;
  std::size_t hash() const noexcept;

  bool is_atom() const noexcept { return kind() == Connective::Atom; }
  bool is_not() const noexcept { return kind() == Connective::Not; }
  bool is_or() const noexcept { return kind() == Connective::Or; }
  bool is_box() const noexcept { return kind() == Connective::Box; }

  friend bool operator==(Formula a, Formula b) noexcept { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(Formula a, Formula b) noexcept;

 private:
  explicit Formula(const detail::FormulaNode* node) : node_(node) {}
  const detail::FormulaNode* node_ = nullptr;
};

// Parses the surface syntax: atoms [a-z][a-z0-9_]*, ~, [], &, |, ->.
// Throws SyntaxError.
Formula parse_formula(std::string_view text);

// Minimal-parenthesis rendering; round-trips through parse_formula.
std::string print_formula(Formula f);

struct Closure {
  std::vector<Formula> subformulas;  // structural order, no duplicates
  std::vector<Formula> boxed;        // boxed members of subformulas
  std::size_t weight = 0;
};

Closure closure(Formula f);

// Distinct atom names occurring in f, sorted.
std::vector<std::string> atoms_of(Formula f);

}  // namespace glwb

template <>
struct std::hash<glwb::Formula> {
  std::size_t operator()(glwb::Formula f) const noexcept { return f.hash(); }
};
