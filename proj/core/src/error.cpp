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

#include "coh/error.hpp"

#include <sstream>

namespace coh {

std::string SourceSpan::str() const {
  std::ostringstream out;
  out << (file.empty() ? "<input>" : file) << ':' << line << ':' << column;
  return out.str();
}

const char* toString(DiagCode code) {
  switch (code) {
    case DiagCode::Syntax: return "syntax";
    case DiagCode::PartialTable: return "partial-table";
    case DiagCode::UnknownElement: return "unknown-element";
    case DiagCode::InvalidStructure: return "invalid-structure";
    case DiagCode::ArityClash: return "arity";
    case DiagCode::UnknownSymbol: return "unknown-symbol";
    case DiagCode::AmbiguousSymbol: return "ambiguous-symbol";
    case DiagCode::AxiomScope: return "axiom-scope";
  }
  return "?";
}

std::string Diagnostic::str() const {
  return span.str() + ": " + toString(code) + ": " + message;
}

namespace {

std::string joinDiagnostics(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    if (!out.empty()) out += '\n';
    out += d.str();
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(joinDiagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {
  if (diagnostics_.empty()) diagnostics_.push_back({DiagCode::Syntax, {}, "parse error"});
}

FuelExhausted::FuelExhausted(std::size_t budget)
    : Error("normalization fuel exhausted after " + std::to_string(budget) + " steps"),
      budget_(budget) {}

const char* toString(DeclErrorKind kind) {
  switch (kind) {
    case DeclErrorKind::DuplicateClass: return "DuplicateClass";
    case DeclErrorKind::DuplicateInstance: return "DuplicateInstance";
    case DeclErrorKind::UnscopedVariable: return "UnscopedVariable";
    case DeclErrorKind::UnknownSuperclass: return "UnknownSuperclass";
    case DeclErrorKind::UnknownClass: return "UnknownClass";
    case DeclErrorKind::MissingOpDef: return "MissingOpDef";
    case DeclErrorKind::ExtraOpDef: return "ExtraOpDef";
    case DeclErrorKind::AmbiguousVariable: return "AmbiguousVariable";
    case DeclErrorKind::FieldConflict: return "FieldConflict";
    case DeclErrorKind::DuplicateField: return "DuplicateField";
  }
  return "?";
}

DeclarationError::DeclarationError(DeclErrorKind kind, const std::string& message)
    : Error(std::string(toString(kind)) + ": " + message), kind_(kind) {}

}  // namespace coh
