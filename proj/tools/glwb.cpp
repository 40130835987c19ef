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

// Command-line front end over the C API.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "glwb/glwb.h"

namespace {

struct IoError {
  std::string message;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  return {std::istreambuf_iterator<char>(in), {}};
}

// A formula or sequent argument; an existing file is read instead.
std::string formula_arg(const std::string& arg) {
  std::error_code ec;
  if (arg == "-" || std::filesystem::is_regular_file(arg, ec)) {
    std::string s = read_all(arg);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
  }
  return arg;
}

int exit_code(glwb_status s) { return s == GLWB_OK ? 0 : s == GLWB_INPUT ? 2 : 1; }

// Prints a result in the requested format and returns the exit code.
int emit(glwb_result* r, bool as_json) {
  glwb_status s = glwb_result_status(r);
  if (as_json) {
    std::cout << glwb_result_json(r) << "\n";
  } else {
    std::cout << glwb_result_output(r);
    std::string diag = glwb_result_diagnostics(r);
    std::string out = glwb_result_output(r);
    if (!diag.empty() && diag != out) std::cerr << diag;
  }
  glwb_result_free(r);
  return exit_code(s);
}

int write_trace(glwb_result* r, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError{"cannot create " + dir};
  for (size_t i = 0; i < glwb_result_stage_count(r); ++i) {
    std::filesystem::path file = std::filesystem::path(dir) / (std::string(glwb_result_stage_name(r, i)) + ".glp");
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError{"cannot write " + file.string()};
    out << glwb_result_stage_proof(r, i);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof search, checking and translation for provability logic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", glwb_version());

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* decide = app.add_subcommand("decide", "Backward proof search");
  std::string calculus = "csgl", input;
  std::size_t fuel = 0;
  bool no_loop_check = false, multiset = false, local_last = false, no_hint = false;
  decide->add_option("--calculus", calculus, "glseq or csgl")->check(CLI::IsMember({"glseq", "csgl"}));
  decide->add_option("--fuel", fuel, "Rule application budget");
  decide->add_flag("--no-loop-check", no_loop_check, "glseq: disable the loop check");
  decide->add_flag("--multiset", multiset, "glseq: keep repeated boxed formulas");
  decide->add_flag("--local-last", local_last, "csgl: expand one label at a time");
  decide->add_flag("--no-hint", no_hint, "Skip the countermodel search on failure");
  decide->add_option("input", input, "Formula, sequent or .glf file")->required();
  add_format(decide);

  auto* check = app.add_subcommand("check", "Validate a proof file");
  std::string proof_file;
  bool extended = false;
  check->add_option("proof", proof_file, "Proof file, - for stdin")->required();
  check->add_flag("--extended", extended, "Accept admissible rules in proofs tagged g3gl");
  add_format(check);

  auto* transform = app.add_subcommand("transform", "Apply a proof transformation");
  std::string pass;
  std::size_t depth = 2;
  transform
      ->add_option("--pass", pass, "end-active, linearize, normalize, to-glseq, to-g3gl, admit, embed or unfold")
      ->required()
      ->check(CLI::IsMember({"end-active", "linearize", "normalize", "to-glseq", "to-g3gl", "admit", "embed", "unfold"}));
  transform->add_option("--depth", depth, "Unfolding depth");
  transform->add_option("proof", proof_file, "Proof file, - for stdin")->required();
  add_format(transform);

  auto* oracle = app.add_subcommand("oracle", "Search for a finite countermodel");
  std::size_t bound = 0, branching = 0;
  oracle->add_option("--bound", bound, "Maximum model depth");
  oracle->add_option("--branching", branching, "Maximum branching");
  oracle->add_option("formula", input, "Formula or .glf file")->required();
  add_format(oracle);

  auto* render = app.add_subcommand("render", "Render a proof, tree sequent or model");
  std::string render_format = "text", render_input;
  render->add_option("--format", render_format, "dot, latex, text or json")
      ->check(CLI::IsMember({"dot", "latex", "text", "json"}));
  render->add_option("input", render_input, "Proof, model or sequent file")->required();

  auto* pipeline = app.add_subcommand("pipeline", "Translate a csgl proof down to g3gl");
  std::string trace_dir;
  pipeline->add_option("formula", input, "Formula or .glf file")->required();
  pipeline->add_option("--emit-trace", trace_dir, "Directory for per-stage proof files");
  add_format(pipeline);

  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world of a model");
  std::string model_file, world;
  eval->add_option("--model", model_file, "Model file")->required();
  eval->add_option("--world", world, "World name")->required();
  eval->add_option("formula", input, "Formula")->required();
  add_format(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "Usage\t.\t" << e.what() << "\n";
    return 2;
  }

  const bool as_json = format == "json";
  glwb_result* r = nullptr;
  try {
    if (*decide) {
      glwb_decide_options opts;
      glwb_decide_options_init(&opts);
      if (fuel) opts.fuel = fuel;
      opts.loop_check = !no_loop_check;
      opts.set_mode = !multiset;
      opts.local_last = local_last;
      opts.oracle_hint = !no_hint;
      glwb_decide(calculus.c_str(), formula_arg(input).c_str(), &opts, &r);
      return emit(r, as_json);
    }
    if (*check) {
      glwb_check(read_all(proof_file).c_str(), !extended, &r);
      return emit(r, as_json);
    }
    if (*transform) {
      glwb_transform(pass.c_str(), read_all(proof_file).c_str(), depth, &r);
      return emit(r, as_json);
    }
    if (*oracle) {
      glwb_oracle(formula_arg(input).c_str(), bound, branching, &r);
      return emit(r, as_json);
    }
    if (*render) {
      bool json_out = render_format == "json";
      glwb_render(json_out ? "text" : render_format.c_str(), read_all(render_input).c_str(), &r);
      return emit(r, json_out);
    }
    if (*pipeline) {
      glwb_status s = glwb_pipeline(formula_arg(input).c_str(), &r);
      if (s == GLWB_OK && !trace_dir.empty()) {
        write_trace(r, trace_dir);
        if (!as_json) {
          for (size_t i = 0; i < glwb_result_stage_count(r); ++i) std::cerr << glwb_result_stage_summary(r, i) << "\n";
          std::cout << glwb_result_output(r);
          glwb_result_free(r);
          return 0;
        }
      }
      return emit(r, as_json);
    }
    if (*eval) {
      glwb_eval(read_all(model_file).c_str(), world.c_str(), formula_arg(input).c_str(), &r);
      return emit(r, as_json);
    }
  } catch (const IoError& e) {
    if (r) glwb_result_free(r);
    std::cerr << "IOError\t.\t" << e.message << "\n";
    return 2;
  }
  return 2;
}
