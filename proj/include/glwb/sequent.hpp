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

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glwb/formula.hpp"

namespace glwb {

// Sorted-vector multisets.
template <class T>
void ms_insert(std::vector<T>& v, const T& x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

template <class T>
bool ms_erase_one(std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || !(*it == x)) return false;
  v.erase(it);
  return true;
}

template <class T>
bool ms_contains(const std::vector<T>& v, const T& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

template <class T>
std::size_t ms_count(const std::vector<T>& v, const T& x) {
  auto r = std::equal_range(v.begin(), v.end(), x);
  return static_cast<std::size_t>(r.second - r.first);
}

template <class T>
bool ms_includes(const std::vector<T>& big, const std::vector<T>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// big - small; requires ms_includes(big, small).
template <class T>
std::vector<T> ms_difference(const std::vector<T>& big, const std::vector<T>& small) {
  std::vector<T> out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
  return out;
}

template <class T>
std::vector<T> ms_union(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

using Label = std::string;

struct GentzenSequent {
  std::vector<Formula> antecedent;  // sorted multiset
  std::vector<Formula> consequent;  // sorted multiset

  void normalize();
  friend bool operator==(const GentzenSequent&, const GentzenSequent&) = default;
};

struct LabeledFormula {
  Label label;
  Formula formula;

  friend bool operator==(const LabeledFormula&, const LabeledFormula&) = default;
  friend std::strong_ordering operator<=>(const LabeledFormula& a, const LabeledFormula& b) {
    if (auto c = a.label.compare(b.label) <=> 0; c != 0) return c;
    return a.formula <=> b.formula;
  }
};

using Relation = std::pair<Label, Label>;

// Relational atoms form a set; formula sides are multisets.
struct LabeledSequent {
  std::vector<Relation> relations;
  std::vector<LabeledFormula> antecedent;
  std::vector<LabeledFormula> consequent;

  void normalize();
  bool has_relation(const Label& x, const Label& y) const;
  void add_relation(const Label& x, const Label& y);
  std::vector<Label> labels() const;  // sorted, distinct
  friend bool operator==(const LabeledSequent&, const LabeledSequent&) = default;
};

// Components left to right; the last one is the end component.
struct LinearNestedSequent {
  std::vector<GentzenSequent> components;

  std::size_t length() const { return components.size(); }
  GentzenSequent& end() { return components.back(); }
  const GentzenSequent& end() const { return components.back(); }
  friend bool operator==(const LinearNestedSequent&, const LinearNestedSequent&) = default;
};

bool is_label(std::string_view s);

GentzenSequent parse_gentzen(std::string_view text);
LabeledSequent parse_labeled(std::string_view text);
LinearNestedSequent parse_lns(std::string_view text);

std::string print_gentzen(const GentzenSequent& s);
std::string print_labeled(const LabeledSequent& s);
std::string print_lns(const LinearNestedSequent& s);

// Tree sequents: labeled sequents whose relational atoms form a tree.
enum class TreeDiagnosis { Cycle, Disconnected, MultiRoot, DanglingLabel };
const char* to_string(TreeDiagnosis d);

std::optional<TreeDiagnosis> diagnose_tree(const LabeledSequent& s);
// Throws Error("NotATree") carrying the diagnosis in the message.
Label tree_root(const LabeledSequent& s);
std::vector<Label> tree_children(const LabeledSequent& s, const Label& x);
std::optional<Label> tree_parent(const LabeledSequent& s, const Label& x);
bool is_leaf(const LabeledSequent& s, const Label& x);
bool is_pre_leaf(const LabeledSequent& s, const Label& x);
std::vector<Label> path_to(const LabeledSequent& s, const Label& x);

GentzenSequent flat_at(const LabeledSequent& s, const Label& x);

// Requires a root-to-leaf path; throws Error("BadPath") otherwise.
LinearNestedSequent path_projection(const LabeledSequent& s, std::span<const Label> path);
// Same projection along any label sequence, without shape checks.
LinearNestedSequent project(const LabeledSequent& s, std::span<const Label> path);

struct TreeView {
  Label label;
  GentzenSequent flat;
  std::vector<TreeView> children;
};
TreeView tree_view(const LabeledSequent& s);

LabeledSequent rename_labels(const LabeledSequent& s, const Label& from, const Label& to);

}  // namespace glwb
