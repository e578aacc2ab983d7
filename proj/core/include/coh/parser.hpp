// Copyright 2026 The coh Authors. All Rights Reserved.
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
#include <string_view>
#include <variant>
#include <vector>

#include "coh/carrier.hpp"
#include "coh/registry.hpp"

namespace coh {

/// One top-level item of a `.tc` file. `requires` lines become opaque
/// InstanceDecls.
using Declaration = std::variant<ClassDecl, InstanceDecl>;

/// Parses a declaration file. Throws ParseError with spanned diagnostics;
/// nothing is registered by parsing alone.
std::vector<Declaration> parseFile(std::string_view text, const std::string& file = "");

/// Goal with optional hypotheses: `[h : monoid M] mul_action (opposite M) M`.
/// Every name in a goal is an opaque atom.
struct Goal {
  std::vector<Premise> assumptions;
  Constraint target;
};

Goal parseGoal(std::string_view text);

/// Parses a `.car` table file and validates its `declares` line. Throws
/// ParseError (Syntax, PartialTable, UnknownElement or InvalidStructure).
CarrierPtr parseCarrier(std::string_view text, const std::string& file = "");

/// Source text that parses back to the same declarations.
std::string printDeclarations(const std::vector<Declaration>& decls);

/// Registers declarations in order. Throws DeclarationError.
void loadInto(Registry& reg, const std::vector<Declaration>& decls);

/// Reads and loads each file in turn.
Registry loadCorpus(const std::vector<std::string>& paths);
CarrierPtr loadCarrier(const std::string& path);

std::string readFile(const std::string& path);

}  // namespace coh
