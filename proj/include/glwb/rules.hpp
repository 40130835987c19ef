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

#include <string>
#include <vector>

#include "glwb/error.hpp"
#include "glwb/proof.hpp"

namespace glwb {

// Raised when a rule instance does not match its conclusion. code() is one
// of the checker reason codes.
class SchemaError : public Error {
 public:
  using Error::Error;
};

bool rule_in_calculus(Calculus c, Rule r);

// Premises of rule `r` with data `m` applied backwards to `conclusion`.
// Initial rules yield no premises. Weaken, Subst and Open cannot be
// reconstructed this way; use the dedicated checks below.
std::vector<Sequent> expand(Calculus c, Rule r, const RuleMeta& m, const Sequent& conclusion);

// True when `premise` is a sub-sequent of `conclusion`.
bool weakens_to(const Sequent& premise, const Sequent& conclusion);

}  // namespace glwb
