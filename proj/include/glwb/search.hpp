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

#include <cstddef>
#include <optional>

#include "glwb/proof.hpp"
#include "glwb/semantics.hpp"

namespace glwb {

// Rule scheduling for decide_csgl. Layered saturates locally, propagates,
// then expands the oldest pending box, which yields end-active proofs.
// LocalLast finishes one label at a time with boxR first; its proofs are
// valid but generally not end-active.
enum class SearchOrder { Layered, LocalLast };

struct SearchConfig {
  std::size_t fuel = 100000;  // rule applications
  bool loop_check = true;     // glseq: refuse a sequent repeating an ancestor
  bool set_mode = true;       // glseq: boxed context without repetitions
  SearchOrder order = SearchOrder::Layered;
  bool oracle_hint = true;    // consult the model oracle on failure
};

enum class Outcome { Proved, NotProved, FuelExhausted };
const char* outcome_name(Outcome o);

struct SearchResult {
  Outcome outcome = Outcome::NotProved;
  std::optional<Proof> proof;
  std::optional<Sequent> saturated;  // failing leaf, when NotProved
  std::optional<OracleVerdict> hint;
  std::size_t steps = 0;
};

SearchResult decide_glseq(const GentzenSequent& s, const SearchConfig& cfg = {});
SearchResult decide_csgl(const LabeledSequent& s, const SearchConfig& cfg = {});

// Conveniences for "|- phi" and "|- x: phi".
SearchResult decide_glseq(Formula f, const SearchConfig& cfg = {});
SearchResult decide_csgl(Formula f, const SearchConfig& cfg = {});

}  // namespace glwb
