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

#include <functional>
#include <set>

#include "glwb/proof.hpp"

namespace glwb::detail {

class NameGen {
 public:
  explicit NameGen(std::set<Label> used, std::size_t start = 0)
      : used_(std::move(used)), counter_(start) {}
  Label next();

 private:
  std::set<Label> used_;
  std::size_t counter_;
};

LabeledSequent map_labels(const LabeledSequent& s, const std::function<Label(const Label&)>& f);
bool binds(const ProofNode& n);
void rename_free(ProofNode& n, const Label& from, const Label& to, NameGen& gen);

// Sequent arithmetic on matching variants.
Sequent sequent_union(const Sequent& a, const Sequent& extra);
Sequent sequent_difference(const Sequent& big, const Sequent& small);
std::set<Label> sequent_labels(const Sequent& s);

ProofNode make_node(Rule r, Sequent conclusion, RuleMeta meta, std::vector<ProofNode> premises = {});
RuleMeta principal_meta(Formula f, const std::optional<Label>& label = std::nullopt);

// Node-level permutation: the rule of lower.premises[j] moved below lower.
ProofNode permute_node(Calculus c, const ProofNode& lower, std::size_t j);

}  // namespace glwb::detail
