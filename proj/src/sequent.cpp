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

#include "glwb/sequent.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "glwb/error.hpp"

namespace glwb {
namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Piece> split(std::string_view s, std::size_t offset, std::string_view seps) {
  std::vector<Piece> out;
  std::size_t start = 0;
  char prev = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
      std::size_t off = offset + start;
      std::string_view part = trim(s.substr(start, i - start), off);
      char next = i == s.size() ? 0 : s[i];
      if (!part.empty()) {
        out.push_back({part, off});
      } else if (prev == ',' || next == ',') {
        throw SyntaxError(off, "formula");
      }
      prev = next;
      start = i + 1;
    }
  }
  return out;
}

Formula parse_at(std::string_view text, std::size_t offset) {
  try {
    return parse_formula(text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(offset + e.position(), e.expected());
  }
}

std::pair<Piece, Piece> split_turnstile(std::string_view text, std::size_t offset) {
  std::size_t at = text.find("|-");
  if (at == std::string_view::npos) throw SyntaxError(offset + text.size(), "'|-'");
  if (text.find("|-", at + 2) != std::string_view::npos) {
    throw SyntaxError(offset + text.find("|-", at + 2), "a single '|-'");
  }
  return {{text.substr(0, at), offset}, {text.substr(at + 2), offset + at + 2}};
}

GentzenSequent parse_gentzen_at(std::string_view text, std::size_t offset) {
  auto [lhs, rhs] = split_turnstile(text, offset);
  GentzenSequent s;
  for (const Piece& p : split(lhs.text, lhs.offset, ",")) s.antecedent.push_back(parse_at(p.text, p.offset));
  for (const Piece& p : split(rhs.text, rhs.offset, ",")) s.consequent.push_back(parse_at(p.text, p.offset));
  s.normalize();
  return s;
}

std::optional<Relation> as_relation(std::string_view item) {
  for (std::size_t i = 1; i + 1 < item.size(); ++i) {
    if (item[i] != 'R') continue;
    std::size_t o = 0;
    std::string_view a = trim(item.substr(0, i), o);
    std::string_view b = trim(item.substr(i + 1), o);
    if (is_label(a) && is_label(b)) return Relation{std::string(a), std::string(b)};
  }
  return std::nullopt;
}

LabeledFormula parse_labeled_formula(const Piece& p) {
  std::size_t colon = p.text.find(':');
  if (colon == std::string_view::npos) throw SyntaxError(p.offset, "'label: formula'");
  std::size_t off = p.offset;
  std::string_view label = trim(p.text.substr(0, colon), off);
  if (!is_label(label)) throw SyntaxError(p.offset, "label");
  std::size_t foff = p.offset + colon + 1;
  std::string_view body = trim(p.text.substr(colon + 1), foff);
  return {std::string(label), parse_at(body, foff)};
}

void join_into(std::string& out, const std::vector<std::string>& items, const char* sep) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
}

std::string assemble(const std::string& lhs, const std::vector<std::string>& rhs) {
  std::string out = lhs;
  if (!out.empty()) out += " ";
  out += "|-";
  if (!rhs.empty()) {
    out += " ";
    join_into(out, rhs, ", ");
  }
  return out;
}

std::vector<std::string> print_all(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (Formula f : fs) out.push_back(print_formula(f));
  return out;
}

std::vector<std::string> print_all(const std::vector<LabeledFormula>& fs) {
  std::vector<std::string> out;
  for (const auto& lf : fs) out.push_back(lf.label + ": " + print_formula(lf.formula));
  return out;
}

std::set<Label> formula_labels(const LabeledSequent& s) {
  std::set<Label> out;
  for (const auto& lf : s.antecedent) out.insert(lf.label);
  for (const auto& lf : s.consequent) out.insert(lf.label);
  return out;
}

}  // namespace

void GentzenSequent::normalize() {
  std::sort(antecedent.begin(), antecedent.end());
  std::sort(consequent.begin(), consequent.end());
}

void LabeledSequent::normalize() {
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  std::sort(antecedent.begin(), antecedent.end());
  std::sort(consequent.begin(), consequent.end());
}

bool LabeledSequent::has_relation(const Label& x, const Label& y) const {
  return std::binary_search(relations.begin(), relations.end(), Relation{x, y});
}

void LabeledSequent::add_relation(const Label& x, const Label& y) {
  Relation r{x, y};
  auto it = std::lower_bound(relations.begin(), relations.end(), r);
  if (it == relations.end() || *it != r) relations.insert(it, r);
}

std::vector<Label> LabeledSequent::labels() const {
  std::set<Label> out = formula_labels(*this);
  for (const auto& [a, b] : relations) {
    out.insert(a);
    out.insert(b);
  }
  return {out.begin(), out.end()};
}

bool is_label(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

GentzenSequent parse_gentzen(std::string_view text) { return parse_gentzen_at(text, 0); }

LabeledSequent parse_labeled(std::string_view text) {
  auto [lhs, rhs] = split_turnstile(text, 0);
  LabeledSequent s;
  for (const Piece& p : split(lhs.text, lhs.offset, ",;")) {
    if (auto r = as_relation(p.text)) {
      s.relations.push_back(*r);
    } else {
      s.antecedent.push_back(parse_labeled_formula(p));
    }
  }
  for (const Piece& p : split(rhs.text, rhs.offset, ",")) {
    s.consequent.push_back(parse_labeled_formula(p));
  }
  s.normalize();
  return s;
}

LinearNestedSequent parse_lns(std::string_view text) {
  LinearNestedSequent s;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = text.find("//", start);
    std::string_view part = text.substr(start, at == std::string_view::npos ? text.npos : at - start);
    s.components.push_back(parse_gentzen_at(part, start));
    if (at == std::string_view::npos) break;
    start = at + 2;
  }
  return s;
}

std::string print_gentzen(const GentzenSequent& s) {
  std::string lhs;
  join_into(lhs, print_all(s.antecedent), ", ");
  return assemble(lhs, print_all(s.consequent));
}

std::string print_labeled(const LabeledSequent& s) {
  std::string lhs;
  for (const auto& [a, b] : s.relations) {
    if (!lhs.empty()) lhs += " ";
    lhs += a + "R" + b + ";";
  }
  std::vector<std::string> ant = print_all(s.antecedent);
  if (!ant.empty()) {
    if (!lhs.empty()) lhs += " ";
    join_into(lhs, ant, ", ");
  }
  return assemble(lhs, print_all(s.consequent));
}

std::string print_lns(const LinearNestedSequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i) out += " // ";
    out += print_gentzen(s.components[i]);
  }
  return out;
}

const char* to_string(TreeDiagnosis d) {
  switch (d) {
    case TreeDiagnosis::Cycle:
      return "cycle";
    case TreeDiagnosis::Disconnected:
      return "disconnected";
    case TreeDiagnosis::MultiRoot:
      return "multi-root";
    case TreeDiagnosis::DanglingLabel:
      return "dangling-label";
  }
  return "?";
}

std::optional<TreeDiagnosis> diagnose_tree(const LabeledSequent& s) {
  std::set<Label> flabels = formula_labels(s);
  if (s.relations.empty()) {
    if (flabels.size() == 1) return std::nullopt;
    return TreeDiagnosis::Disconnected;
  }
  std::map<Label, std::vector<Label>> out, undirected;
  std::map<Label, int> indeg;
  for (const auto& [a, b] : s.relations) {
    if (a == b) return TreeDiagnosis::Cycle;
    out[a].push_back(b);
    undirected[a].push_back(b);
    undirected[b].push_back(a);
    indeg[a] += 0;
    indeg[b] += 1;
  }
  // Directed cycle detection.
  std::map<Label, int> color;
  bool cyclic = false;
  std::function<void(const Label&)> dfs = [&](const Label& v) {
    color[v] = 1;
    for (const Label& w : out[v]) {
      if (color[w] == 1) cyclic = true;
      if (color[w] == 0) dfs(w);
    }
    color[v] = 2;
  };
  for (const auto& [v, _] : indeg) {
    if (color[v] == 0) dfs(v);
  }
  if (cyclic) return TreeDiagnosis::Cycle;
  std::set<Label> seen;
  std::vector<Label> stack{indeg.begin()->first};
  while (!stack.empty()) {
    Label v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (const Label& w : undirected[v]) stack.push_back(w);
  }
  if (seen.size() != indeg.size()) return TreeDiagnosis::Disconnected;
  int roots = 0;
  for (const auto& [v, d] : indeg) {
    if (d == 0) ++roots;
  }
  if (roots != 1) return TreeDiagnosis::MultiRoot;
  // One root and connected: a second parent closes an undirected cycle.
  for (const auto& [v, d] : indeg) {
    if (d > 1) return TreeDiagnosis::Cycle;
  }
  for (const Label& l : flabels) {
    if (!indeg.count(l)) return TreeDiagnosis::DanglingLabel;
  }
  return std::nullopt;
}

Label tree_root(const LabeledSequent& s) {
  if (auto d = diagnose_tree(s)) throw Error("NotATree", to_string(*d));
  if (s.relations.empty()) {
    return !s.antecedent.empty() ? s.antecedent.front().label : s.consequent.front().label;
  }
  std::set<Label> targets;
  for (const auto& r : s.relations) targets.insert(r.second);
  for (const auto& r : s.relations) {
    if (!targets.count(r.first)) return r.first;
  }
  throw Error("NotATree", "cycle");
}

std::vector<Label> tree_children(const LabeledSequent& s, const Label& x) {
  std::vector<Label> out;
  for (const auto& [a, b] : s.relations) {
    if (a == x) out.push_back(b);
  }
  return out;
}

std::optional<Label> tree_parent(const LabeledSequent& s, const Label& x) {
  for (const auto& [a, b] : s.relations) {
    if (b == x) return a;
  }
  return std::nullopt;
}

bool is_leaf(const LabeledSequent& s, const Label& x) {
  return std::none_of(s.relations.begin(), s.relations.end(),
                      [&](const Relation& r) { return r.first == x; });
}

bool is_pre_leaf(const LabeledSequent& s, const Label& x) {
  for (const Label& c : tree_children(s, x)) {
    if (!is_leaf(s, c)) return false;
  }
  return true;
}

std::vector<Label> path_to(const LabeledSequent& s, const Label& x) {
  std::vector<Label> path{x};
  std::set<Label> seen{x};
  while (auto p = tree_parent(s, path.back())) {
    if (!seen.insert(*p).second) throw Error("NotATree", "cycle");
    path.push_back(*p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

GentzenSequent flat_at(const LabeledSequent& s, const Label& x) {
  GentzenSequent g;
  for (const auto& lf : s.antecedent) {
    if (lf.label == x) g.antecedent.push_back(lf.formula);
  }
  for (const auto& lf : s.consequent) {
    if (lf.label == x) g.consequent.push_back(lf.formula);
  }
  g.normalize();
  return g;
}

LinearNestedSequent path_projection(const LabeledSequent& s, std::span<const Label> path) {
  Label root = tree_root(s);
  if (path.empty() || path.front() != root) throw Error("BadPath", "path must start at the root");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!s.has_relation(path[i], path[i + 1])) {
      throw Error("BadPath", path[i] + "R" + path[i + 1] + " is not an edge");
    }
  }
  if (!is_leaf(s, path.back())) throw Error("BadPath", "path must end at a leaf");
  return project(s, path);
}

LinearNestedSequent project(const LabeledSequent& s, std::span<const Label> path) {
  LinearNestedSequent out;
  for (const Label& l : path) out.components.push_back(flat_at(s, l));
  return out;
}

TreeView tree_view(const LabeledSequent& s) {
  std::function<TreeView(const Label&)> build = [&](const Label& x) {
    TreeView v{x, flat_at(s, x), {}};
    for (const Label& c : tree_children(s, x)) v.children.push_back(build(c));
    return v;
  };
  return build(tree_root(s));
}

LabeledSequent rename_labels(const LabeledSequent& s, const Label& from, const Label& to) {
  LabeledSequent out = s;
  auto fix = [&](Label& l) {
    if (l == from) l = to;
  };
  for (auto& [a, b] : out.relations) {
    fix(a);
    fix(b);
  }
  for (auto& lf : out.antecedent) fix(lf.label);
  for (auto& lf : out.consequent) fix(lf.label);
  out.normalize();
  return out;
}

}  // namespace glwb
