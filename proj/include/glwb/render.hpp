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

#include <optional>
#include <string>
#include <string_view>

#include "glwb/proof.hpp"
#include "glwb/semantics.hpp"

namespace glwb {

enum class RenderFormat { Text, Dot, Latex };
std::optional<RenderFormat> render_format_from_name(std::string_view s);

std::string render_proof(const Proof& p, RenderFormat f);
std::string render_tree_sequent(const LabeledSequent& s, RenderFormat f);
std::string render_model(const Model& m, RenderFormat f);

// LaTeX math for a printed sequent or formula.
std::string latex_math(std::string_view printed);

}  // namespace glwb
