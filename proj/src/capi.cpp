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

#include "glwb/glwb.h"

#include <exception>
#include <string>
#include <vector>

#include "glwb/checkers.hpp"
#include "glwb/error.hpp"
#include "glwb/render.hpp"
#include "glwb/search.hpp"
#include "glwb/semantics.hpp"
#include "glwb/transform.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

struct glwb_formula {
  glwb::Formula f;
  std::string printed;
};

struct glwb_result {
  glwb_status status = GLWB_OK;
  std::string output;
  std::string diagnostics;
  std::string json;
  struct StageText {
    std::string name, proof, summary;
  };
  std::vector<StageText> stages;
};

namespace {

using namespace glwb;

bool is_input_error(const std::string& code) {
  return code == "SyntaxError" || code == "ProofSyntax" || code == "ModelError" || code == "UnknownWorld" ||
         code == "BadAddress" || code == "EmptySequent" || code == "UnknownLabel" || code == "Usage";
}

std::string line(const std::string& code, const std::string& message) { return code + "\t.\t" + message + "\n"; }

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

// Runs `body`, mapping library exceptions onto statuses and reports.
template <typename F>
glwb_status guarded(glwb_result** out, F&& body) {
  auto* r = new glwb_result;
  *out = r;
  try {
    body(*r);
  } catch (const SyntaxError& e) {
    r->status = GLWB_INPUT;
    r->diagnostics = line(e.code(), e.what());
    json j = error_json(e.code(), e.what());
    j["error"]["position"] = e.position();
    r->json = j.dump(2);
  } catch (const Error& e) {
    r->status = is_input_error(e.code()) ? GLWB_INPUT : e.code() == "InternalError" ? GLWB_INTERNAL : GLWB_NEGATIVE;
    r->diagnostics = line(e.code(), e.what());
    r->json = error_json(e.code(), e.what()).dump(2);
  } catch (const std::exception& e) {
    r->status = GLWB_INTERNAL;
    r->diagnostics = line("InternalError", e.what());
    r->json = error_json("InternalError", e.what()).dump(2);
  }
  return r->status;
}

json report_json(const PassReport& p) {
  return {{"pass", p.pass},         {"nodes_in", p.nodes_in},     {"nodes_out", p.nodes_out},
          {"height_in", p.height_in}, {"height_out", p.height_out}, {"steps", p.steps}};
}

json failures_json(const CheckReport& rep) {
  json arr = json::array();
  for (const auto& f : rep.failures) {
    arr.push_back({{"code", f.code},
                   {"detail", f.detail},
                   {"address", f.address.empty() ? "." : print_address(f.address)},
                   {"message", f.message}});
  }
  return arr;
}

std::string verdict_text(const OracleVerdict& v) {
  if (v.valid) return v.bound_too_small ? "valid (below default bound)\n" : "valid\n";
  return "countermodel at " + v.world + "\n" + print_model(*v.countermodel);
}

json verdict_json(const OracleVerdict& v) {
  json j{{"valid", v.valid}, {"bound_too_small", v.bound_too_small}};
  if (v.countermodel) {
    j["countermodel"] = print_model(*v.countermodel);
    j["world"] = v.world;
  }
  return j;
}

bool looks_like_sequent(std::string_view s) { return s.find("|-") != std::string_view::npos; }

}  // namespace

extern "C" {

const char* glwb_version(void) { return "0.1.0"; }

void glwb_decide_options_init(glwb_decide_options* opts) {
  SearchConfig d;
  opts->fuel = d.fuel;
  opts->loop_check = d.loop_check;
  opts->set_mode = d.set_mode;
  opts->local_last = d.order == SearchOrder::LocalLast;
  opts->oracle_hint = d.oracle_hint;
}

glwb_status glwb_formula_parse(const char* text, glwb_formula** out, size_t* error_position) {
  *out = nullptr;
  try {
    Formula f = parse_formula(text);
    *out = new glwb_formula{f, print_formula(f)};
    return GLWB_OK;
  } catch (const SyntaxError& e) {
    if (error_position) *error_position = e.position();
    return GLWB_INPUT;
  } catch (const std::exception&) {
    return GLWB_INTERNAL;
  }
}

const char* glwb_formula_print(const glwb_formula* f) { return f->printed.c_str(); }
size_t glwb_formula_weight(const glwb_formula* f) { return f->f.weight(); }
void glwb_formula_free(glwb_formula* f) { delete f; }

glwb_status glwb_decide(const char* calculus, const char* input, const glwb_decide_options* opts,
                        glwb_result** out) {
  return guarded(out, [&](glwb_result& r) {
    std::string cal = calculus;
    if (cal != "glseq" && cal != "csgl") throw Error("Usage", "decide supports glseq and csgl, not " + cal);
    SearchConfig cfg;
    if (opts) {
      if (opts->fuel) cfg.fuel = opts->fuel;
      cfg.loop_check = opts->loop_check;
      cfg.set_mode = opts->set_mode;
      cfg.order = opts->local_last ? SearchOrder::LocalLast : SearchOrder::Layered;
      cfg.oracle_hint = opts->oracle_hint;
    }
    std::string_view text = input;
    SearchResult res;
    if (cal == "glseq") {
      res = looks_like_sequent(text) ? decide_glseq(parse_gentzen(text), cfg) : decide_glseq(parse_formula(text), cfg);
    } else {
      res = looks_like_sequent(text) ? decide_csgl(parse_labeled(text), cfg) : decide_csgl(parse_formula(text), cfg);
    }
    json j{{"command", "decide"}, {"calculus", cal}, {"input", input}, {"outcome", outcome_name(res.outcome)},
           {"steps", res.steps}};
    if (res.outcome == Outcome::Proved) {
      r.output = write_proof(*res.proof);
      j["proof"] = r.output;
    } else {
      r.status = GLWB_NEGATIVE;
      std::string out_text = std::string("outcome: ") + outcome_name(res.outcome) + "\n";
      if (res.saturated) {
        out_text += "saturated: " + print_sequent(*res.saturated) + "\n";
        j["saturated"] = print_sequent(*res.saturated);
      }
      if (res.hint) {
        out_text += verdict_text(*res.hint);
        j["oracle"] = verdict_json(*res.hint);
      }
      r.output = out_text;
      r.diagnostics = line(outcome_name(res.outcome), "no proof of " + std::string(input));
    }
    r.json = j.dump(2);
  });
}

glwb_status glwb_check(const char* proof_text, int strict, glwb_result** out) {
  return guarded(out, [&](glwb_result& r) {
    Proof p = read_proof(proof_text);
    CheckReport rep = check_proof(p, strict ? CheckMode::Strict : CheckMode::Extended);
    json j{{"command", "check"}, {"calculus", calculus_name(p.calculus)}, {"accepted", rep.accepted},
           {"failures", failures_json(rep)}};
    if (rep.accepted) {
      r.output = "accepted\n";
    } else {
      r.status = GLWB_NEGATIVE;
      r.output = rep.text();
      r.diagnostics = rep.text();
    }
    r.json = j.dump(2);
  });
}

glwb_status glwb_transform(const char* pass, const char* proof_text, size_t depth, glwb_result** out) {
  return guarded(out, [&](glwb_result& r) {
    std::string name = pass;
    static const std::vector<std::string> known{"end-active", "linearize", "normalize", "to-glseq",
                                                "to-g3gl",    "admit",     "embed",     "unfold"};
    if (std::find(known.begin(), known.end(), name) == known.end()) throw Error("Usage", "unknown pass " + name);
    Proof in = read_proof(proof_text);
    PassResult res{in, {name}};
    auto measure = [&](const Proof& p) {
      res.proof = p;
      res.report.nodes_in = node_count(in.root);
      res.report.height_in = height(in.root);
      res.report.nodes_out = node_count(p.root);
      res.report.height_out = height(p.root);
    };
    json j{{"command", "transform"}, {"pass", name}};
    if (name == "end-active") {
      res = to_end_active(in);
    } else if (name == "linearize") {
      Linearization l = linearize(in);
      measure(l.proof);
      j["path"] = l.path;
    } else if (name == "normalize") {
      res = normalize_lngl(in);
    } else if (name == "to-glseq") {
      res = lngl_to_glseq(in);
    } else if (name == "to-g3gl") {
      res = glseq_to_g3gl(in);
    } else if (name == "admit") {
      measure(admit_all(in));
    } else if (name == "embed") {
      measure(csgl_to_g3gl_embed(in));
    } else {
      measure(unfold_glcirc(in, depth));
    }
    res.report.pass = name;
    r.output = write_proof(res.proof);
    r.diagnostics = res.report.line() + "\n";
    j["report"] = report_json(res.report);
    j["proof"] = r.output;
    r.json = j.dump(2);
  });
}

glwb_status glwb_oracle(const char* formula, size_t max_depth, size_t max_branching, glwb_result** out) {
  return guarded(out, [&](glwb_result& r) {
    Formula f = parse_formula(formula);
    ModelBound b = default_bound(f);
    if (max_depth) b.max_depth = max_depth;
    if (max_branching) b.max_branching = max_branching;
    OracleVerdict v = oracle_validity(f, b);
    r.status = v.valid ? GLWB_OK : GLWB_NEGATIVE;
    r.output = verdict_text(v);
    json j{{"command", "oracle"}, {"formula", print_formula(f)}, {"bound", {{"depth", b.max_depth}, {"branching", b.max_branching}}}};
    j.update(verdict_json(v));
    r.json = j.dump(2);
  });
}

glwb_status glwb_render(const char* format, const char* text, glwb_result** out) {
  return guarded(out, [&](glwb_result& r) {
    auto fmt = render_format_from_name(format);
    if (!fmt) throw Error("Usage", std::string("unknown format ") + format);
    std::string_view t = text;
    std::size_t start = t.find_first_not_of(" \t\r\n");
    std::string_view body = start == std::string_view::npos ? std::string_view{} : t.substr(start);
    std::string kind;
    if (body.rfind("calculus:", 0) == 0) {
      kind = "proof";
      r.output = render_proof(read_proof(t), *fmt);
    } else if (body.rfind("worlds:", 0) == 0) {
      kind = "model";
      r.output = render_model(parse_model(t), *fmt);
    } else {
      kind = "tree-sequent";
      LabeledSequent s = parse_labeled(t);
      if (auto d = diagnose_tree(s)) throw Error("NotATree", std::string(to_string(*d)));
      r.output = render_tree_sequent(s, *fmt);
    }
    r.json = json{{"command", "render"}, {"kind", kind}, {"format", format}, {"output", r.output}}.dump(2);
  });
}

glwb_status glwb_pipeline(const char* formula, glwb_result** out) {
  return guarded(out, [&](glwb_result& r) {
    Formula f = parse_formula(formula);
    std::vector<Stage> stages = pipeline(f);
    json arr = json::array();
    for (const auto& s : stages) {
      r.stages.push_back({s.name, write_proof(s.proof), s.report.line()});
      r.diagnostics += s.report.line() + "\n";
      arr.push_back({{"name", s.name}, {"report", report_json(s.report)}, {"proof", r.stages.back().proof}});
    }
    r.output = r.stages.back().proof;
    r.json = json{{"command", "pipeline"}, {"formula", print_formula(f)}, {"stages", arr}}.dump(2);
  });
}

glwb_status glwb_eval(const char* model_text, const char* world, const char* formula, glwb_result** out) {
  return guarded(out, [&](glwb_result& r) {
    Model m = parse_model(model_text);
    Formula f = parse_formula(formula);
    bool holds = eval(m, std::string_view(world), f);
    r.status = holds ? GLWB_OK : GLWB_NEGATIVE;
    r.output = holds ? "true\n" : "false\n";
    r.json = json{{"command", "eval"}, {"world", world}, {"formula", print_formula(f)}, {"holds", holds}}.dump(2);
  });
}

glwb_status glwb_result_status(const glwb_result* r) { return r->status; }
const char* glwb_result_output(const glwb_result* r) { return r->output.c_str(); }
const char* glwb_result_diagnostics(const glwb_result* r) { return r->diagnostics.c_str(); }
const char* glwb_result_json(const glwb_result* r) { return r->json.c_str(); }
size_t glwb_result_stage_count(const glwb_result* r) { return r->stages.size(); }
const char* glwb_result_stage_name(const glwb_result* r, size_t i) {
  return i < r->stages.size() ? r->stages[i].name.c_str() : nullptr;
}
const char* glwb_result_stage_proof(const glwb_result* r, size_t i) {
  return i < r->stages.size() ? r->stages[i].proof.c_str() : nullptr;
}
const char* glwb_result_stage_summary(const glwb_result* r, size_t i) {
  return i < r->stages.size() ? r->stages[i].summary.c_str() : nullptr;
}
void glwb_result_free(glwb_result* r) { delete r; }

}  // extern "C"
