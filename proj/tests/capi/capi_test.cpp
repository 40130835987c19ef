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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "doctest.h"
#include "glwb/glwb.h"
#include "json.hpp"

extern "C" int glwb_c_roundtrip(const char* text, char* buf, size_t len);

namespace {

struct ResultFree {
  void operator()(glwb_result* r) const { glwb_result_free(r); }
};
using Result = std::unique_ptr<glwb_result, ResultFree>;

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GLWB_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("formula handles from C") {
  char buf[64];
  CHECK(glwb_c_roundtrip("[]([]p->p)->[]p", buf, sizeof buf) == 10);
  CHECK(std::string(buf) == "~[](~[]p | p) | []p");
  CHECK(glwb_c_roundtrip("p |", buf, sizeof buf) == -4);
  CHECK(std::string(glwb_version()) == "0.1.0");
}

TEST_CASE("decide") {
  glwb_decide_options opts;
  glwb_decide_options_init(&opts);
  glwb_result* raw = nullptr;
  CHECK(glwb_decide("csgl", "[]([]p->p)->[]p", &opts, &raw) == GLWB_OK);
  Result proved(raw);
  std::string proof = glwb_result_output(proved.get());
  CHECK(proof.rfind("calculus: csgl", 0) == 0);

  glwb_result* checked = nullptr;
  CHECK(glwb_check(proof.c_str(), 1, &checked) == GLWB_OK);
  CHECK(std::string(glwb_result_output(checked)) == "accepted\n");
  glwb_result_free(checked);

  CHECK(glwb_decide("glseq", "[]p -> p", &opts, &raw) == GLWB_NEGATIVE);
  Result refuted(raw);
  CHECK(std::string(glwb_result_output(refuted.get())).find("countermodel at") != std::string::npos);
  auto j = nlohmann::json::parse(glwb_result_json(refuted.get()));
  CHECK(j["outcome"] == "NotProved");
  CHECK(j["oracle"]["valid"] == false);

  CHECK(glwb_decide("csgl", "x: p |- x: p", &opts, &raw) == GLWB_OK);
  glwb_result_free(raw);
  CHECK(glwb_decide("nope", "p", &opts, &raw) == GLWB_INPUT);
  glwb_result_free(raw);
  CHECK(glwb_decide("csgl", "p |", nullptr, &raw) == GLWB_INPUT);
  Result bad(raw);
  auto e = nlohmann::json::parse(glwb_result_json(bad.get()));
  CHECK(e["error"]["code"] == "SyntaxError");
  CHECK(e["error"]["position"] == 3);
}

TEST_CASE("check reports reason codes") {
  glwb_result* raw = nullptr;
  CHECK(glwb_check(fixture("neg_backlink_self.glp").c_str(), 1, &raw) == GLWB_NEGATIVE);
  Result r(raw);
  CHECK(std::string(glwb_result_diagnostics(r.get())).rfind("BadBacklink(self)\t", 0) == 0);
  std::string g3 = fixture("g3gl_lob_step.glp");
  g3 = "calculus: g3gl" + g3.substr(g3.find('\n'));
  CHECK(glwb_check(g3.c_str(), 1, &raw) == GLWB_NEGATIVE);
  glwb_result_free(raw);
  CHECK(glwb_check(g3.c_str(), 0, &raw) == GLWB_OK);
  glwb_result_free(raw);
  CHECK(glwb_check("calculus: csgl\n(rule", 1, &raw) == GLWB_INPUT);
  glwb_result_free(raw);
}

TEST_CASE("pipeline stages") {
  glwb_result* raw = nullptr;
  REQUIRE(glwb_pipeline("[]p -> [][]p", &raw) == GLWB_OK);
  Result r(raw);
  REQUIRE(glwb_result_stage_count(r.get()) == 6);
  for (size_t i = 0; i < 6; ++i) {
    glwb_result* c = nullptr;
    CHECK(glwb_check(glwb_result_stage_proof(r.get(), i), 0, &c) == GLWB_OK);
    glwb_result_free(c);
    CHECK(std::string(glwb_result_stage_name(r.get(), i)).size() > 0);
  }
  CHECK(glwb_result_stage_name(r.get(), 6) == nullptr);
}

TEST_CASE("transform, oracle, render, eval") {
  glwb_result* raw = nullptr;
  CHECK(glwb_transform("unfold", fixture("lob_cyclic.glp").c_str(), 1, &raw) == GLWB_OK);
  glwb_result_free(raw);
  CHECK(glwb_transform("bogus", fixture("id1.glp").c_str(), 0, &raw) == GLWB_INPUT);
  glwb_result_free(raw);
  CHECK(glwb_transform("linearize", fixture("id1.glp").c_str(), 0, &raw) == GLWB_OK);
  glwb_result_free(raw);

  CHECK(glwb_oracle("[]([]p->p)->[]p", 0, 0, &raw) == GLWB_OK);
  glwb_result_free(raw);
  CHECK(glwb_oracle("[][]p -> []p", 0, 0, &raw) == GLWB_NEGATIVE);
  Result cm(raw);
  std::string model = glwb_result_output(cm.get());
  CHECK(model.find("\nworlds: w0 w1\n") != std::string::npos);

  CHECK(glwb_render("dot", fixture("lob_cyclic.glp").c_str(), &raw) == GLWB_OK);
  CHECK(std::string(glwb_result_output(raw)).rfind("digraph", 0) == 0);
  glwb_result_free(raw);
  CHECK(glwb_render("latex", "xRy; x: []p |- y: p", &raw) == GLWB_OK);
  glwb_result_free(raw);

  const char* m = "worlds: w u\nrel: w<u\nval p: u\n";
  CHECK(glwb_eval(m, "w", "[]p", &raw) == GLWB_OK);
  glwb_result_free(raw);
  CHECK(glwb_eval(m, "w", "[]p -> p", &raw) == GLWB_NEGATIVE);
  glwb_result_free(raw);
  CHECK(glwb_eval(m, "v", "p", &raw) == GLWB_INPUT);
  glwb_result_free(raw);
}
