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
#include <set>
#include <string>
#include <vector>

#include "glwb/proof.hpp"

namespace glwb {

struct PassReport {
  std::string pass;
  std::size_t nodes_in = 0;
  std::size_t nodes_out = 0;
  std::size_t height_in = 0;
  std::size_t height_out = 0;
  std::size_t steps = 0;  // permutations or rewrites performed

  std::string line() const;
};

struct PassResult {
  Proof proof;
  PassReport report;
};

// Labels occurring anywhere in the proof, including rule data.
std::set<Label> labels_in(const ProofNode& n);

// Renames every bound label (boxR fresh labels, subst sources) to y1, y2,
// ... in breadth-first order, skipping labels of the root conclusion.
void canonicalize_labels(Proof& p);

// Renames free occurrences of `from` to `to` in a labeled subproof,
// renaming any binder that would capture `to`.
void rename_free(ProofNode& n, const Label& from, const Label& to);

// Height-preserving weakening: adds `extra` to every sequent of the proof
// where it is still available. For nested proofs `extra` is added
// componentwise and may be shorter than the conclusion.
ProofNode weaken(Calculus c, const ProofNode& p, const Sequent& extra);

// Height-preserving label substitution: the proof with `from` replaced by
// `to` everywhere it occurs free.
ProofNode substitute(Calculus c, const ProofNode& p, const Label& from, const Label& to);

// Contraction: given a proof whose conclusion holds at least two copies of
// `lf` on the chosen side, a proof with one copy fewer.
ProofNode contract(Calculus c, const ProofNode& p, const LabeledFormula& lf, bool antecedent);

// Given a proof of the conclusion of rule instance (r, m), a proof of its
// premise `branch`. Height-preserving for local and propagation rules; the
// boxR inverse may grow when an id2 closes on the principal formula.
ProofNode apply_inverse(Calculus c, const ProofNode& p, Rule r, const RuleMeta& m, std::size_t branch);

// Replaces the admissible-rule node (w, subst, cL, cR) at `at` with a
// derivation of the same conclusion from its transformed premise.
Proof admit(const Proof& p, const Address& at);
// Admits every w, subst, cL and cR node, innermost first.
Proof admit_all(const Proof& p);

// A proof of a sequent in which `f` occurs on both sides, built from
// atomic and boxed identities.
ProofNode prove_general_id(Calculus c, const Sequent& s, Formula f, const Label& x = {});

// Swaps the rule at `upper` with the rule directly below it. Throws
// PassError("NotPermutable") when the lower conclusion does not admit the
// upper rule.
Proof permute_down(const Proof& p, const Address& upper);

PassResult to_end_active(const Proof& csgl);

struct Linearization {
  Proof proof;              // LNGL
  std::vector<Label> path;  // root-to-label path projected at the root
};
Linearization linearize(const Proof& csgl);

PassResult normalize_lngl(const Proof& lngl);
PassResult lngl_to_glseq(const Proof& lngl);
PassResult glseq_to_g3gl(const Proof& glseq);
Proof csgl_to_g3gl_embed(const Proof& csgl);

// Replaces every back-linked leaf by a copy of its target, `depth` times.
Proof unfold_glcirc(const CyclicDerivation& d, std::size_t depth);

// Full translation chain starting from a CSGL search proof of "|- x: phi".
struct Stage {
  std::string name;
  Proof proof;
  PassReport report;
};
std::vector<Stage> pipeline(Formula f);

}  // namespace glwb
