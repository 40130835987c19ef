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

#include "glwb/proof.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "glwb/error.hpp"

namespace glwb {
namespace {

constexpr std::array<std::pair<Rule, const char*>, 20> kRuleNames{{
    {Rule::Id, "id"},       {Rule::Id1, "id1"},       {Rule::Id2, "id2"},
    {Rule::Ir, "ir"},       {Rule::Tr, "tr"},         {Rule::NegL, "negL"},
    {Rule::NegR, "negR"},   {Rule::OrL, "orL"},       {Rule::OrR, "orR"},
    {Rule::BoxL, "boxL"},   {Rule::BoxR, "boxR"},     {Rule::FourL, "4L"},
    {Rule::BoxGL, "boxGL"}, {Rule::Box4, "box4"},     {Rule::Weaken, "w"},
    {Rule::ContractL, "cL"}, {Rule::ContractR, "cR"}, {Rule::Cut, "cut"},
    {Rule::Subst, "subst"}, {Rule::Open, "open"},
}};

constexpr std::array<std::pair<Calculus, const char*>, 7> kCalculusNames{{
    {Calculus::GLseq, "glseq"},
    {Calculus::K4seq, "k4seq"},
    {Calculus::G3GL, "g3gl"},
    {Calculus::G3GLext, "g3glext"},
    {Calculus::CSGL, "csgl"},
    {Calculus::LNGL, "lngl"},
    {Calculus::GLcirc, "glcirc"},
}};

struct SExpr {
  bool is_list = false;
  bool quoted = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error("ProofSyntax", "line " + std::to_string(line) + ": " + msg);
}

class Reader {
 public:
  Reader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) fail(line_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      SExpr e;
      e.is_list = true;
      e.line = line_;
      ++pos_;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) fail(e.line, "unterminated list");
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')') fail(line_, "unexpected ')'");
    SExpr e;
    e.line = line_;
    if (c == '"') {
      e.quoted = true;
      ++pos_;
      for (;;) {
        if (pos_ >= text_.size()) fail(e.line, "unterminated string");
        char d = text_[pos_++];
        if (d == '"') break;
        if (d == '\\' && pos_ < text_.size()) d = text_[pos_++];
        if (d == '\n') ++line_;
        e.atom += d;
      }
      return e;
    }
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"') {
      e.atom += text_[pos_++];
    }
    return e;
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join_formulas(const std::vector<Formula>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(fs[i]);
  }
  return out;
}

void write_node(std::ostringstream& out, const ProofNode& n, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (n.rule == Rule::Open) {
    out << pad << "(open (concl " << quote(print_sequent(n.conclusion)) << ")";
    if (n.backlink) out << " (backlink " << quote(print_address(*n.backlink)) << ")";
    out << ")";
    return;
  }
  out << pad << "(rule " << rule_name(n.rule) << "\n";
  out << pad << "  (concl " << quote(print_sequent(n.conclusion)) << ")";
  const RuleMeta& m = n.meta;
  std::string meta;
  if (m.label) meta += " label=" + *m.label;
  if (m.formula) meta += " formula=" + quote(print_formula(*m.formula));
  if (m.aux) meta += " aux=" + *m.aux;
  if (m.third) meta += " third=" + *m.third;
  if (!m.boxes.empty()) meta += " boxes=" + quote(join_formulas(m.boxes));
  if (!meta.empty()) out << "\n" << pad << "  (meta" << meta << ")";
  if (!n.premises.empty()) {
    out << "\n" << pad << "  (prems";
    for (const auto& p : n.premises) {
      out << "\n";
      write_node(out, p, depth + 2);
    }
    out << ")";
  }
  out << ")";
}

std::string single_string(const SExpr& section) {
  if (section.items.size() != 2 || section.items[1].is_list) {
    fail(section.line, "expected one value in (" + section.items[0].atom + " ...)");
  }
  return section.items[1].atom;
}

std::vector<Formula> parse_formula_list(const std::string& s, std::size_t line) {
  std::vector<Formula> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.find_first_not_of(' ') != std::string::npos) {
      try {
        out.push_back(parse_formula(part));
      } catch (const SyntaxError& e) {
        fail(line, std::string("bad formula in boxes: ") + e.what());
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RuleMeta parse_meta(const SExpr& section) {
  RuleMeta m;
  const auto& items = section.items;
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].is_list || items[i].quoted) fail(section.line, "expected key=value in meta");
    std::string key = items[i].atom;
    std::string value;
    std::size_t eq = key.find('=');
    if (eq == std::string::npos) fail(section.line, "expected key=value in meta");
    value = key.substr(eq + 1);
    key = key.substr(0, eq);
    if (value.empty()) {
      if (i + 1 >= items.size() || items[i + 1].is_list) fail(section.line, "missing value for " + key);
      value = items[++i].atom;
    }
    auto label = [&]() {
      if (!is_label(value)) fail(section.line, "bad label '" + value + "'");
      return value;
    };
    if (key == "label") {
      m.label = label();
    } else if (key == "aux") {
      m.aux = label();
    } else if (key == "third") {
      m.third = label();
    } else if (key == "formula") {
      try {
        m.formula = parse_formula(value);
      } catch (const SyntaxError& e) {
        fail(section.line, std::string("bad formula: ") + e.what());
      }
    } else if (key == "boxes") {
      m.boxes = parse_formula_list(value, section.line);
    } else {
      fail(section.line, "unknown meta key '" + key + "'");
    }
  }
  return m;
}

ProofNode parse_node(const SExpr& e, SequentKind kind) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) fail(e.line, "expected (rule ...) or (open ...)");
  const std::string& head = e.items[0].atom;
  ProofNode n;
  std::size_t first_section = 1;
  if (head == "open") {
    n.rule = Rule::Open;
  } else if (head == "rule") {
    if (e.items.size() < 2 || e.items[1].is_list) fail(e.line, "missing rule name");
    auto r = rule_from_name(e.items[1].atom);
    if (!r || *r == Rule::Open) fail(e.line, "unknown rule '" + e.items[1].atom + "'");
    n.rule = *r;
    first_section = 2;
  } else {
    fail(e.line, "expected rule or open, got '" + head + "'");
  }
  const SExpr* concl = nullptr;
  for (std::size_t i = first_section; i < e.items.size(); ++i) {
    const SExpr& s = e.items[i];
    if (!s.is_list || s.items.empty() || s.items[0].is_list) fail(s.line, "expected a section");
    const std::string& sh = s.items[0].atom;
    if (sh == "concl") {
      concl = &s;
    } else if (sh == "meta") {
      n.meta = parse_meta(s);
    } else if (sh == "prems") {
      for (std::size_t k = 1; k < s.items.size(); ++k) n.premises.push_back(parse_node(s.items[k], kind));
    } else if (sh == "backlink") {
      n.backlink = parse_address(single_string(s));
    } else {
      fail(s.line, "unknown section '" + sh + "'");
    }
  }
  if (!concl) fail(e.line, "missing (concl ...)");
  try {
    n.conclusion = parse_sequent(kind, single_string(*concl));
  } catch (const SyntaxError& err) {
    fail(concl->line, std::string("bad sequent: ") + err.what());
  }
  if (n.backlink && n.rule != Rule::Open) fail(e.line, "backlink on a non-open node");
  if (n.rule == Rule::Open && !n.premises.empty()) fail(e.line, "open leaf with premises");
  return n;
}

}  // namespace

const char* calculus_name(Calculus c) {
  for (const auto& [k, v] : kCalculusNames) {
    if (k == c) return v;
  }
  return "?";
}

std::optional<Calculus> calculus_from_name(std::string_view s) {
  for (const auto& [k, v] : kCalculusNames) {
    if (s == v) return k;
  }
  return std::nullopt;
}

const char* rule_name(Rule r) {
  for (const auto& [k, v] : kRuleNames) {
    if (k == r) return v;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view s) {
  for (const auto& [k, v] : kRuleNames) {
    if (s == v) return k;
  }
  return std::nullopt;
}

SequentKind sequent_kind(Calculus c) {
  switch (c) {
    case Calculus::GLseq:
    case Calculus::K4seq:
    case Calculus::GLcirc:
      return SequentKind::Gentzen;
    case Calculus::G3GL:
    case Calculus::G3GLext:
    case Calculus::CSGL:
      return SequentKind::Labeled;
    case Calculus::LNGL:
      return SequentKind::Nested;
  }
  return SequentKind::Gentzen;
}

bool is_local(Rule r) {
  return r == Rule::NegL || r == Rule::NegR || r == Rule::OrL || r == Rule::OrR;
}

bool is_propagation(Rule r) { return r == Rule::BoxL || r == Rule::FourL; }

bool is_initial(Rule r) {
  return r == Rule::Id || r == Rule::Id1 || r == Rule::Id2 || r == Rule::Ir;
}

std::string print_sequent(const Sequent& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GentzenSequent>) return print_gentzen(v);
        if constexpr (std::is_same_v<T, LabeledSequent>) return print_labeled(v);
        if constexpr (std::is_same_v<T, LinearNestedSequent>) return print_lns(v);
      },
      s);
}

Sequent parse_sequent(SequentKind kind, std::string_view text) {
  switch (kind) {
    case SequentKind::Gentzen:
      return parse_gentzen(text);
    case SequentKind::Labeled:
      return parse_labeled(text);
    case SequentKind::Nested:
      return parse_lns(text);
  }
  return parse_gentzen(text);
}

std::string print_address(const Address& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += "/";
    out += std::to_string(a[i]);
  }
  return out;
}

Address parse_address(std::string_view s) {
  Address a;
  if (s.empty() || s == "/") return a;
  std::size_t start = 0;
  for (;;) {
    std::size_t slash = s.find('/', start);
    std::string_view part = s.substr(start, slash == std::string_view::npos ? s.npos : slash - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error("ProofSyntax", "bad address '" + std::string(s) + "'");
    }
    a.push_back(std::stoul(std::string(part)));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return a;
}

std::size_t height(const ProofNode& n) {
  std::size_t h = 0;
  for (const auto& p : n.premises) h = std::max(h, height(p) + 1);
  return h;
}

std::size_t node_count(const ProofNode& n) {
  std::size_t c = 1;
  for (const auto& p : n.premises) c += node_count(p);
  return c;
}

const ProofNode& node_at(const ProofNode& root, const Address& a) {
  const ProofNode* n = &root;
  for (std::size_t i : a) {
    if (i >= n->premises.size()) throw Error("BadAddress", print_address(a));
    n = &n->premises[i];
  }
  return *n;
}

ProofNode& node_at(ProofNode& root, const Address& a) {
  ProofNode* n = &root;
  for (std::size_t i : a) {
    if (i >= n->premises.size()) throw Error("BadAddress", print_address(a));
    n = &n->premises[i];
  }
  return *n;
}

std::string write_proof(const Proof& p) {
  std::ostringstream out;
  out << "calculus: " << calculus_name(p.calculus) << "\n";
  write_node(out, p.root, 0);
  out << "\n";
  return out.str();
}

Proof read_proof(std::string_view text) {
  std::size_t nl = text.find('\n');
  std::string_view first = text.substr(0, nl);
  while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.remove_suffix(1);
  constexpr std::string_view kPrefix = "calculus:";
  if (first.substr(0, kPrefix.size()) != kPrefix) fail(1, "expected 'calculus: <id>'");
  std::string_view name = first.substr(kPrefix.size());
  while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
  auto calc = calculus_from_name(name);
  if (!calc) fail(1, "unknown calculus '" + std::string(name) + "'");
  Proof p;
  p.calculus = *calc;
  if (nl == std::string_view::npos) fail(1, "missing proof body");
  Reader reader(text.substr(nl + 1), 2);
  SExpr e = reader.read();
  if (!reader.at_end()) fail(e.line, "trailing content after proof");
  p.root = parse_node(e, sequent_kind(p.calculus));
  return p;
}

}  // namespace glwb
