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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glwb/formula.hpp"
#include "glwb/sequent.hpp"

namespace glwb {

// Finite Kripke model with a transitive irreflexive accessibility relation.
class Model {
 public:
  // Closes `edges` transitively; throws Error("ModelError") on reflexive pairs
  // (before or after closure) and on unknown worlds.
  static Model build(std::vector<std::string> worlds,
                     const std::vector<std::pair<std::string, std::string>>& edges,
                     const std::map<std::string, std::vector<std::string>>& valuation);

  const std::vector<std::string>& worlds() const { return worlds_; }
  std::size_t size() const { return worlds_.size(); }
  std::size_t index_of(std::string_view world) const;  // throws UnknownWorld
  bool related(std::size_t a, std::size_t b) const { return rel_[a][b]; }
  bool holds(const std::string& atom, std::size_t world) const;
  const std::map<std::string, std::vector<bool>>& valuation() const { return val_; }

 private:
  std::vector<std::string> worlds_;
  std::vector<std::vector<bool>> rel_;
  std::map<std::string, std::vector<bool>> val_;
};

Model parse_model(std::string_view text);
std::string print_model(const Model& m);

bool eval(const Model& m, std::size_t world, Formula f);
bool eval(const Model& m, std::string_view world, Formula f);

using Assignment = std::map<Label, std::string>;
bool eval_labeled_sequent(const Model& m, const Assignment& a, const LabeledSequent& s);

struct ModelBound {
  std::size_t max_depth = 0;
  std::size_t max_branching = 0;
};

ModelBound default_bound(Formula f);

struct OracleVerdict {
  bool valid = false;
  bool bound_too_small = false;
  std::optional<Model> countermodel;
  std::string world;  // refuting world when !valid
};

// Exhaustive search over finite irreflexive tree models within `bound`,
// with the relation taken as the strict descendant order. Subtrees are
// identified by the set of subformulas they force, so isomorphic subtrees
// are visited once. Countermodels are minimal in world count.
OracleVerdict oracle_validity(Formula f, std::optional<ModelBound> bound = std::nullopt);

// Formula reading of a linear nested sequent.
Formula lns_interpretation(const LinearNestedSequent& s);
// Formula reading of a Gentzen sequent: conjunction of antecedent implies
// disjunction of consequent.
Formula gentzen_interpretation(const GentzenSequent& s);
// Formula reading of a tree sequent at its root.
Formula tree_interpretation(const LabeledSequent& s);

// Brute force over every strict partial order on up to `max_worlds`
// worlds; for sequents that are not trees.
bool labeled_sequent_valid_bruteforce(const LabeledSequent& s, std::size_t max_worlds);

}  // namespace glwb
