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

#include "glwb/render.hpp"

#include <functional>
#include <sstream>

#include "glwb/error.hpp"

namespace glwb {
namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void text_node(std::ostringstream& out, const ProofNode& n, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "[" << rule_name(n.rule) << "] "
      << print_sequent(n.conclusion);
  if (n.backlink) out << "  -> " << (n.backlink->empty() ? "." : print_address(*n.backlink));
  out << "\n";
  for (const auto& p : n.premises) text_node(out, p, depth + 1);
}

void dot_node(std::ostringstream& out, const ProofNode& n, const Address& at) {
  std::string id = "n" + (at.empty() ? std::string() : "_" + print_address(at));
  for (char& c : id) {
    if (c == '/') c = '_';
  }
  out << "  " << id << " [label=\"" << dot_escape(print_sequent(n.conclusion)) << "\\n" << rule_name(n.rule)
      << "\"];\n";
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    Address child = at;
    child.push_back(i);
    std::string cid = "n_" + print_address(child);
    for (char& c : cid) {
      if (c == '/') c = '_';
    }
    out << "  " << cid << " -> " << id << ";\n";
    dot_node(out, n.premises[i], child);
  }
  if (n.backlink) {
    std::string tid = n.backlink->empty() ? "n" : "n_" + print_address(*n.backlink);
    for (char& c : tid) {
      if (c == '/') c = '_';
    }
    out << "  " << id << " -> " << tid << " [style=dashed];\n";
  }
}

void latex_node(std::ostringstream& out, const ProofNode& n) {
  std::string concl = "$" + latex_math(print_sequent(n.conclusion)) + "$";
  if (n.rule == Rule::Open) {
    out << "\\AxiomC{" << concl << "}\n";
    return;
  }
  if (n.premises.empty()) out << "\\AxiomC{}\n";
  for (const auto& p : n.premises) latex_node(out, p);
  out << "\\RightLabel{\\scriptsize " << latex_math(rule_name(n.rule)) << "}\n";
  switch (n.premises.size()) {
    case 0:
    case 1:
      out << "\\UnaryInfC{" << concl << "}\n";
      break;
    case 2:
      out << "\\BinaryInfC{" << concl << "}\n";
      break;
    default:
      out << "\\TrinaryInfC{" << concl << "}\n";
      break;
  }
}

void tree_text(std::ostringstream& out, const TreeView& v, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << v.label << ": " << print_gentzen(v.flat) << "\n";
  for (const auto& c : v.children) tree_text(out, c, depth + 1);
}

void tree_dot(std::ostringstream& out, const TreeView& v) {
  out << "  " << v.label << " [label=\"" << v.label << ": " << dot_escape(print_gentzen(v.flat)) << "\"];\n";
  for (const auto& c : v.children) {
    out << "  " << v.label << " -> " << c.label << ";\n";
    tree_dot(out, c);
  }
}

void tree_latex(std::ostringstream& out, const TreeView& v) {
  out << "[{$" << v.label << ": " << latex_math(print_gentzen(v.flat)) << "$}";
  for (const auto& c : v.children) {
    out << " ";
    tree_latex(out, c);
  }
  out << "]";
}

}  // namespace

std::optional<RenderFormat> render_format_from_name(std::string_view s) {
  if (s == "text") return RenderFormat::Text;
  if (s == "dot") return RenderFormat::Dot;
  if (s == "latex") return RenderFormat::Latex;
  return std::nullopt;
}

std::string latex_math(std::string_view printed) {
  std::string out;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    std::string_view rest = printed.substr(i);
    if (rest.substr(0, 2) == "|-") {
      out += "\\vdash";
      ++i;
    } else if (rest.substr(0, 2) == "//") {
      out += "\\mathbin{/\\!/}";
      ++i;
    } else if (rest.substr(0, 2) == "[]") {
      out += "\\Box ";
      ++i;
    } else if (rest[0] == '~') {
      out += "\\neg ";
    } else if (rest[0] == '|') {
      out += "\\lor";
    } else if (rest[0] == '_') {
      out += "\\_";
    } else if (rest[0] == '#' || rest[0] == '%' || rest[0] == '&' || rest[0] == '$') {
      out += '\\';
      out += rest[0];
    } else {
      out += rest[0];
    }
  }
  return out;
}

std::string render_proof(const Proof& p, RenderFormat f) {
  std::ostringstream out;
  switch (f) {
    case RenderFormat::Text:
      out << "calculus: " << calculus_name(p.calculus) << "\n";
      text_node(out, p.root, 0);
      break;
    case RenderFormat::Dot:
      out << "digraph proof {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
      dot_node(out, p.root, {});
      out << "}\n";
      break;
    case RenderFormat::Latex:
      out << "\\begin{prooftree}\n";
      latex_node(out, p.root);
      out << "\\end{prooftree}\n";
      break;
  }
  return out.str();
}

std::string render_tree_sequent(const LabeledSequent& s, RenderFormat f) {
  TreeView v = tree_view(s);
  std::ostringstream out;
  switch (f) {
    case RenderFormat::Text:
      tree_text(out, v, 0);
      break;
    case RenderFormat::Dot:
      out << "digraph tree {\n  node [shape=box, fontname=\"monospace\"];\n";
      tree_dot(out, v);
      out << "}\n";
      break;
    case RenderFormat::Latex:
      out << "\\begin{forest}\n";
      tree_latex(out, v);
      out << "\n\\end{forest}\n";
      break;
  }
  return out.str();
}

std::string render_model(const Model& m, RenderFormat f) {
  std::ostringstream out;
  auto facts = [&](std::size_t w) {
    std::string s;
    for (const auto& [atom, bits] : m.valuation()) {
      if (!bits[w]) continue;
      if (!s.empty()) s += ",";
      s += atom;
    }
    return s;
  };
  switch (f) {
    case RenderFormat::Text:
      out << print_model(m);
      break;
    case RenderFormat::Dot:
      out << "digraph model {\n";
      for (std::size_t i = 0; i < m.size(); ++i) {
        out << "  " << m.worlds()[i] << " [label=\"" << m.worlds()[i] << " {" << facts(i) << "}\"];\n";
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (m.related(i, j)) out << "  " << m.worlds()[i] << " -> " << m.worlds()[j] << ";\n";
        }
      }
      out << "}\n";
      break;
    case RenderFormat::Latex:
      out << "\\begin{tabular}{ll}\n";
      for (std::size_t i = 0; i < m.size(); ++i) {
        out << "$" << latex_math(m.worlds()[i]) << "$ & $\\{" << latex_math(facts(i)) << "\\}$ \\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
  }
  return out.str();
}

}  // namespace glwb
