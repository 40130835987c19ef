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

#include "glwb/semantics.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "glwb/error.hpp"

namespace glwb {
namespace {

constexpr std::size_t kMaxClosure = 256;
using Bits = std::bitset<kMaxClosure>;

struct BitsPairHash {
  std::size_t operator()(const std::pair<Bits, Bits>& p) const {
    std::hash<Bits> h;
    return h(p.first) * 1000003u ^ h(p.second);
  }
};

std::string trim_copy(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Formula tautology() {
  Formula p0 = Formula::atom("p0");
  return Formula::disjunction(p0, Formula::negation(p0));
}

Formula big_and(const std::vector<Formula>& fs) {
  if (fs.empty()) return tautology();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conjunction(acc, fs[i]);
  return acc;
}

Formula big_or(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::negation(tautology());
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disjunction(acc, fs[i]);
  return acc;
}

// Tree-model search state. A subtree is summarised by the pair
// (T, B): T is what holds at its root, B what holds at every world of it.
class TreeOracle {
 public:
  TreeOracle(Formula f, ModelBound bound) : target_(f), bound_(bound) {
    Closure c = closure(f);
    if (c.subformulas.size() > kMaxClosure) {
      throw Error("OracleLimit", "formula closure exceeds " + std::to_string(kMaxClosure));
    }
    order_ = c.subformulas;
    std::stable_sort(order_.begin(), order_.end(),
                     [](Formula a, Formula b) { return a.weight() < b.weight(); });
    for (std::size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = i;
    for (Formula g : order_) {
      if (g.is_atom()) atoms_.push_back(g);
    }
    if (atoms_.size() > 20) throw Error("OracleLimit", "too many atoms");
    for (std::size_t i = 0; i < order_.size(); ++i) all_.set(i);
  }

  OracleVerdict run() {
    for (std::uint32_t v = 0; v < (1u << atoms_.size()); ++v) {
      Bits t = force(v, all_);
      offer(t, t, 1, v, {});
    }
    for (std::size_t d = 1; d <= bound_.max_depth; ++d) {
      if (!grow()) break;
    }
    OracleVerdict verdict;
    std::size_t goal = index_.at(target_);
    int best = -1;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].t.test(goal)) continue;
      if (best < 0 || nodes_[i].size < nodes_[best].size) best = static_cast<int>(i);
    }
    if (best < 0) {
      verdict.valid = true;
      return verdict;
    }
    verdict.countermodel = materialize(best);
    verdict.world = "w0";
    if (eval(*verdict.countermodel, std::size_t{0}, target_)) {
      throw Error("InternalError", "oracle countermodel does not refute the formula");
    }
    return verdict;
  }

 private:
  struct Node {
    Bits t, b;
    std::size_t size;
    std::uint32_t valuation;
    std::vector<int> children;
  };

  Bits force(std::uint32_t valuation, const Bits& below) const {
    Bits t;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      Formula g = order_[i];
      switch (g.kind()) {
        case Connective::Atom: {
          std::size_t a = std::find(atoms_.begin(), atoms_.end(), g) - atoms_.begin();
          t[i] = (valuation >> a) & 1u;
          break;
        }
        case Connective::Not:
          t[i] = !t[index_.at(g.sub())];
          break;
        case Connective::Or:
          t[i] = t[index_.at(g.left())] || t[index_.at(g.right())];
          break;
        case Connective::Box:
          t[i] = below[index_.at(g.sub())];
          break;
      }
    }
    return t;
  }

  bool offer(const Bits& t, const Bits& b, std::size_t size, std::uint32_t valuation,
             std::vector<int> children) {
    auto key = std::make_pair(t, b);
    auto it = ids_.find(key);
    if (it == ids_.end()) {
      ids_.emplace(key, static_cast<int>(nodes_.size()));
      nodes_.push_back({t, b, size, valuation, std::move(children)});
      return true;
    }
    Node& n = nodes_[it->second];
    if (size < n.size) {
      n.size = size;
      n.valuation = valuation;
      n.children = std::move(children);
      return true;
    }
    return false;
  }

  bool grow() {
    struct Group {
      Bits b;
      std::size_t size;
      int id;
    };
    std::vector<Group> groups;
    {
      std::unordered_map<Bits, std::size_t> by_b;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        auto [it, fresh] = by_b.emplace(nodes_[i].b, groups.size());
        if (fresh) {
          groups.push_back({nodes_[i].b, nodes_[i].size, static_cast<int>(i)});
        } else if (nodes_[i].size < groups[it->second].size) {
          groups[it->second].size = nodes_[i].size;
          groups[it->second].id = static_cast<int>(i);
        }
      }
    }
    struct Combo {
      Bits a;
      std::size_t size;
      std::vector<int> children;
    };
    std::vector<Combo> combos;
    std::unordered_map<Bits, std::size_t> combo_index;
    auto add_combo = [&](const Bits& a, std::size_t size, std::vector<int> ch) {
      auto [it, fresh] = combo_index.emplace(a, combos.size());
      if (fresh) {
        combos.push_back({a, size, std::move(ch)});
        return true;
      }
      if (size < combos[it->second].size) {
        combos[it->second] = {a, size, std::move(ch)};
        return true;
      }
      return false;
    };
    for (const Group& g : groups) add_combo(g.b, g.size, {g.id});
    for (std::size_t k = 2; k <= bound_.max_branching; ++k) {
      bool changed = false;
      std::vector<Combo> snapshot = combos;
      for (const Combo& c : snapshot) {
        if (c.children.size() != k - 1) continue;
        for (const Group& g : groups) {
          std::vector<int> ch = c.children;
          ch.push_back(g.id);
          changed |= add_combo(c.a & g.b, c.size + g.size, std::move(ch));
        }
      }
      if (!changed) break;
    }
    bool changed = false;
    for (const Combo& c : combos) {
      for (std::uint32_t v = 0; v < (1u << atoms_.size()); ++v) {
        Bits t = force(v, c.a);
        changed |= offer(t, t & c.a, c.size + 1, v, c.children);
      }
    }
    return changed;
  }

  Model materialize(int root) const {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::vector<std::string>> val;
    for (Formula a : atoms_) val[a.name()];
    // Breadth-first naming; each queue entry carries its ancestor chain.
    struct Item {
      int node;
      std::vector<std::string> ancestors;
    };
    std::vector<Item> queue{{root, {}}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Item item = queue[qi];
      std::string name = "w" + std::to_string(names.size());
      names.push_back(name);
      for (const auto& anc : item.ancestors) edges.emplace_back(anc, name);
      const Node& n = nodes_[item.node];
      for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if ((n.valuation >> a) & 1u) val[atoms_[a].name()].push_back(name);
      }
      std::vector<std::string> chain = item.ancestors;
      chain.push_back(name);
      for (int c : n.children) queue.push_back({c, chain});
    }
    return Model::build(names, edges, val);
  }

  Formula target_;
  ModelBound bound_;
  std::vector<Formula> order_;
  std::unordered_map<Formula, std::size_t> index_;
  std::vector<Formula> atoms_;
  Bits all_;
  std::vector<Node> nodes_;
  std::unordered_map<std::pair<Bits, Bits>, int, BitsPairHash> ids_;
};

}  // namespace

Model Model::build(std::vector<std::string> worlds,
                   const std::vector<std::pair<std::string, std::string>>& edges,
                   const std::map<std::string, std::vector<std::string>>& valuation) {
  Model m;
  m.worlds_ = std::move(worlds);
  std::set<std::string> unique(m.worlds_.begin(), m.worlds_.end());
  if (unique.size() != m.worlds_.size()) throw Error("ModelError", "duplicate world name");
  const std::size_t n = m.worlds_.size();
  m.rel_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : edges) m.rel_[m.index_of(a)][m.index_of(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.rel_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m.rel_[k][j]) m.rel_[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m.rel_[i][i]) {
      throw Error("ModelError", "relation is not irreflexive at " + m.worlds_[i]);
    }
  }
  for (const auto& [atom, ws] : valuation) {
    std::vector<bool> bits(n, false);
    for (const auto& w : ws) bits[m.index_of(w)] = true;
    m.val_[atom] = std::move(bits);
  }
  return m;
}

std::size_t Model::index_of(std::string_view world) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i] == world) return i;
  }
  throw Error("UnknownWorld", std::string(world));
}

bool Model::holds(const std::string& atom, std::size_t world) const {
  auto it = val_.find(atom);
  return it != val_.end() && it->second[world];
}

Model parse_model(std::string_view text) {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::vector<std::string>> val;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::string body = trim_copy(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) throw Error("ModelError", "line " + std::to_string(lineno) + ": missing ':'");
    std::string head = trim_copy(body.substr(0, colon));
    std::string rest = body.substr(colon + 1);
    if (head == "worlds") {
      for (auto& w : words(rest)) worlds.push_back(w);
    } else if (head == "rel") {
      std::string item;
      std::istringstream items(rest);
      while (std::getline(items, item, ';')) {
        for (auto& pair : words(item)) {
          std::size_t lt = pair.find('<');
          if (lt == std::string::npos) throw Error("ModelError", "line " + std::to_string(lineno) + ": expected 'a<b'");
          edges.emplace_back(pair.substr(0, lt), pair.substr(lt + 1));
        }
      }
    } else if (head.rfind("val", 0) == 0) {
      auto hw = words(head);
      if (hw.size() != 2 || hw[0] != "val") throw Error("ModelError", "line " + std::to_string(lineno) + ": expected 'val <atom>:'");
      auto& slot = val[hw[1]];
      for (auto& w : words(rest)) slot.push_back(w);
    } else {
      throw Error("ModelError", "line " + std::to_string(lineno) + ": unknown section '" + head + "'");
    }
  }
  return Model::build(worlds, edges, val);
}

std::string print_model(const Model& m) {
  std::string out = "worlds:";
  for (const auto& w : m.worlds()) out += " " + w;
  out += "\nrel:";
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!m.related(i, j)) continue;
      out += first ? " " : "; ";
      out += m.worlds()[i] + "<" + m.worlds()[j];
      first = false;
    }
  }
  out += "\n";
  for (const auto& [atom, bits] : m.valuation()) {
    out += "val " + atom + ":";
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) out += " " + m.worlds()[i];
    }
    out += "\n";
  }
  return out;
}

bool eval(const Model& m, std::size_t world, Formula f) {
  switch (f.kind()) {
    case Connective::Atom:
      return m.holds(f.name(), world);
    case Connective::Not:
      return !eval(m, world, f.sub());
    case Connective::Or:
      return eval(m, world, f.left()) || eval(m, world, f.right());
    case Connective::Box:
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m.related(world, v) && !eval(m, v, f.sub())) return false;
      }
      return true;
  }
  return false;
}

bool eval(const Model& m, std::string_view world, Formula f) { return eval(m, m.index_of(world), f); }

bool eval_labeled_sequent(const Model& m, const Assignment& a, const LabeledSequent& s) {
  auto world = [&](const Label& l) {
    auto it = a.find(l);
    if (it == a.end()) throw Error("UnknownLabel", l);
    return m.index_of(it->second);
  };
  for (const auto& [x, y] : s.relations) {
    if (!m.related(world(x), world(y))) return true;
  }
  for (const auto& lf : s.antecedent) {
    if (!eval(m, world(lf.label), lf.formula)) return true;
  }
  for (const auto& lf : s.consequent) {
    if (eval(m, world(lf.label), lf.formula)) return true;
  }
  return false;
}

ModelBound default_bound(Formula f) {
  std::size_t k = closure(f).boxed.size() + 1;
  return {k, k};
}

OracleVerdict oracle_validity(Formula f, std::optional<ModelBound> bound) {
  ModelBound def = default_bound(f);
  ModelBound use = bound.value_or(def);
  OracleVerdict v = TreeOracle(f, use).run();
  v.bound_too_small = use.max_depth < def.max_depth || use.max_branching < def.max_branching;
  return v;
}

Formula lns_interpretation(const LinearNestedSequent& s) {
  if (s.components.empty()) throw Error("EmptySequent", "linear nested sequent has no components");
  std::function<Formula(std::size_t)> at = [&](std::size_t i) {
    const GentzenSequent& c = s.components[i];
    std::vector<Formula> rhs = c.consequent;
    if (i + 1 < s.components.size()) rhs.push_back(Formula::box(at(i + 1)));
    return Formula::implication(big_and(c.antecedent), big_or(rhs));
  };
  return at(0);
}

Formula gentzen_interpretation(const GentzenSequent& s) {
  return Formula::implication(big_and(s.antecedent), big_or(s.consequent));
}

Formula tree_interpretation(const LabeledSequent& s) {
  std::function<Formula(const Label&)> at = [&](const Label& x) {
    GentzenSequent g = flat_at(s, x);
    std::vector<Formula> rhs = g.consequent;
    for (const Label& c : tree_children(s, x)) rhs.push_back(Formula::box(at(c)));
    return Formula::implication(big_and(g.antecedent), big_or(rhs));
  };
  return at(tree_root(s));
}

bool labeled_sequent_valid_bruteforce(const LabeledSequent& s, std::size_t max_worlds) {
  std::vector<Label> labels = s.labels();
  std::set<std::string> atom_set;
  for (const auto* side : {&s.antecedent, &s.consequent}) {
    for (const auto& lf : *side) {
      for (auto& a : atoms_of(lf.formula)) atom_set.insert(a);
    }
  }
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) pairs.emplace_back(i, j);
      }
    }
    for (std::uint64_t rmask = 0; rmask < (1ull << pairs.size()); ++rmask) {
      std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((rmask >> k) & 1u) r[pairs[k].first][pairs[k].second] = true;
      }
      bool strict = true;
      for (std::size_t i = 0; i < n && strict; ++i) {
        for (std::size_t j = 0; j < n && strict; ++j) {
          for (std::size_t k = 0; k < n && strict; ++k) {
            if (r[i][j] && r[j][k] && !r[i][k]) strict = false;
          }
        }
      }
      if (!strict) continue;
      std::vector<std::pair<std::string, std::string>> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((rmask >> k) & 1u) edges.emplace_back(names[pairs[k].first], names[pairs[k].second]);
      }
      const std::uint64_t vals = 1ull << (n * atoms.size());
      for (std::uint64_t vmask = 0; vmask < vals; ++vmask) {
        std::map<std::string, std::vector<std::string>> val;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
          auto& slot = val[atoms[a]];
          for (std::size_t w = 0; w < n; ++w) {
            if ((vmask >> (a * n + w)) & 1u) slot.push_back(names[w]);
          }
        }
        Model m = Model::build(names, edges, val);
        std::vector<std::size_t> assign(labels.size(), 0);
        for (;;) {
          Assignment asg;
          for (std::size_t i = 0; i < labels.size(); ++i) asg[labels[i]] = names[assign[i]];
          if (!eval_labeled_sequent(m, asg, s)) return false;
          std::size_t i = 0;
          while (i < assign.size() && ++assign[i] == n) assign[i++] = 0;
          if (i == assign.size()) break;
        }
      }
    }
  }
  return true;
}

}  // namespace glwb
