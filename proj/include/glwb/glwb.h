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

#ifndef GLWB_GLWB_H_
#define GLWB_GLWB_H_

#include <stddef.h>

#if defined(_WIN32)
#define GLWB_API __declspec(dllexport)
#else
#define GLWB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glwb_status {
  GLWB_OK = 0,        /* proved, accepted, valid, pass succeeded */
  GLWB_NEGATIVE = 1,  /* not proved, rejected, countermodel, pass refused */
  GLWB_INPUT = 2,     /* usage or parse error */
  GLWB_INTERNAL = 3
} glwb_status;

typedef struct glwb_result glwb_result;
typedef struct glwb_formula glwb_formula;

typedef struct glwb_decide_options {
  size_t fuel;       /* 0 selects the default */
  int loop_check;    /* glseq */
  int set_mode;      /* glseq */
  int local_last;    /* csgl: finish one label at a time */
  int oracle_hint;
} glwb_decide_options;

GLWB_API const char* glwb_version(void);
GLWB_API void glwb_decide_options_init(glwb_decide_options* opts);

/* Formulas. Returned strings are owned by the handle. */
GLWB_API glwb_status glwb_formula_parse(const char* text, glwb_formula** out, size_t* error_position);
GLWB_API const char* glwb_formula_print(const glwb_formula* f);
GLWB_API size_t glwb_formula_weight(const glwb_formula* f);
GLWB_API void glwb_formula_free(glwb_formula* f);

/* Every operation below stores a result in *out, also on failure, and
   returns the same status as glwb_result_status. */

/* `input` is a formula, or a sequent when it contains "|-".
   calculus: glseq | csgl. */
GLWB_API glwb_status glwb_decide(const char* calculus, const char* input, const glwb_decide_options* opts,
                                 glwb_result** out);
/* strict != 0 rejects admissible rules in proofs tagged g3gl; proofs
   tagged g3glext always admit them. */
GLWB_API glwb_status glwb_check(const char* proof_text, int strict, glwb_result** out);
/* pass: end-active | linearize | normalize | to-glseq | to-g3gl | admit |
   embed | unfold. `depth` is used by unfold only. */
GLWB_API glwb_status glwb_transform(const char* pass, const char* proof_text, size_t depth, glwb_result** out);
/* 0 selects the default bound. */
GLWB_API glwb_status glwb_oracle(const char* formula, size_t max_depth, size_t max_branching, glwb_result** out);
/* `text` is a proof file, a model, or a tree sequent.
   format: text | dot | latex. */
GLWB_API glwb_status glwb_render(const char* format, const char* text, glwb_result** out);
GLWB_API glwb_status glwb_pipeline(const char* formula, glwb_result** out);
GLWB_API glwb_status glwb_eval(const char* model_text, const char* world, const char* formula, glwb_result** out);

GLWB_API glwb_status glwb_result_status(const glwb_result* r);
/* Primary payload: a proof file, a model, a rendering. */
GLWB_API const char* glwb_result_output(const glwb_result* r);
/* Reason-code lines: CODE<TAB>address<TAB>message. */
GLWB_API const char* glwb_result_diagnostics(const glwb_result* r);
GLWB_API const char* glwb_result_json(const glwb_result* r);
/* Stage accessors return NULL past the last stage. */
GLWB_API size_t glwb_result_stage_count(const glwb_result* r);
GLWB_API const char* glwb_result_stage_name(const glwb_result* r, size_t i);
GLWB_API const char* glwb_result_stage_proof(const glwb_result* r, size_t i);
GLWB_API const char* glwb_result_stage_summary(const glwb_result* r, size_t i);
GLWB_API void glwb_result_free(glwb_result* r);

#ifdef __cplusplus
}
#endif

#endif  // GLWB_GLWB_H_
