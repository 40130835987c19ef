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

/* Compiled as C to keep the public header C-clean. */
int glwb_c_roundtrip(const char* text, char* buf, size_t len) {
  glwb_formula* f = 0;
  size_t pos = 0;
  if (glwb_formula_parse(text, &f, &pos) != GLWB_OK) return -(int)pos - 1;
  const char* s = glwb_formula_print(f);
  size_t i = 0;
  for (; s[i] && i + 1 < len; ++i) buf[i] = s[i];
  buf[i] = 0;
  int w = (int)glwb_formula_weight(f);
  glwb_formula_free(f);
  return w;
}
