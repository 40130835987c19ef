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

#include "glwb/proof.hpp"

namespace glwb {

struct Failure {
  std::string code;    // stable reason identifier, e.g. "SchemaMismatch"
  std::string detail;  // optional qualifier, e.g. "multi-root"
  Address address;
  std::string message;

  std::string qualified_code() const;  // code or code(detail)
  std::string line() const;            // CODE \t address \t message
};

struct CheckReport {
  bool accepted = true;
  std::vector<Failure> failures;

  void fail(Failure f);
  std::string text() const;  // one line per failure
};

enum class CheckMode { Strict, Extended };

CheckReport check_glseq(const Proof& p);
CheckReport check_k4seq(const Proof& p);
CheckReport check_g3gl(const Proof& p, CheckMode mode = CheckMode::Strict);
CheckReport check_csgl(const Proof& p);
CheckReport check_lngl(const Proof& p);
CheckReport check_glcirc(const CyclicDerivation& d);

// K4seq schema with Open leaves permitted anywhere; for unfolded prefixes.
CheckReport check_k4seq_prefix(const Proof& p);

// Dispatches on the calculus tag. Strict mode rejects admissible rules in
// g3gl proofs; g3glext proofs always allow them.
CheckReport check_proof(const Proof& p, CheckMode mode = CheckMode::Strict);

// Per-node end-activity of a CSGL proof.
CheckReport end_active_report(const Proof& p);
// Block discipline above every boxR of an LNGL proof.
CheckReport normal_form_report(const Proof& p);

}  // namespace glwb
