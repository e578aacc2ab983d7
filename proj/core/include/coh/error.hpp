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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coh {

/// Location of a diagnostic inside a source text. Line and column are 1-based.
struct SourceSpan {
  std::string file;
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  std::uint32_t length = 0;

  std::string str() const;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class DiagCode {
  Syntax,
  PartialTable,
  UnknownElement,
  InvalidStructure,
  ArityClash,
  UnknownSymbol,
  AmbiguousSymbol,
  AxiomScope,
};

const char* toString(DiagCode code);

struct Diagnostic {
  DiagCode code = DiagCode::Syntax;
  SourceSpan span;
  std::string message;

  std::string str() const;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the parsers. Carries every diagnostic collected before giving up.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  DiagCode code() const { return diagnostics_.front().code; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class ClashError : public Error {
 public:
  using Error::Error;
};

class OccursError : public Error {
 public:
  using Error::Error;
};

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(std::size_t budget);
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

enum class DeclErrorKind {
  DuplicateClass,
  DuplicateInstance,
  UnscopedVariable,
  UnknownSuperclass,
  UnknownClass,
  MissingOpDef,
  ExtraOpDef,
  AmbiguousVariable,
  FieldConflict,
  DuplicateField,
};

const char* toString(DeclErrorKind kind);

class DeclarationError : public Error {
 public:
  DeclarationError(DeclErrorKind kind, const std::string& message);
  DeclErrorKind kind() const { return kind_; }

 private:
  DeclErrorKind kind_;
};

class NoInstance : public Error {
 public:
  using Error::Error;
};

class DepthExceeded : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class ScalarOutOfRange : public EvalError {
 public:
  using EvalError::EvalError;
};

class UnboundVariable : public EvalError {
 public:
  using EvalError::EvalError;
};

class CarrierTooLarge : public Error {
 public:
  using Error::Error;
};

/// A definitional-equality verdict contradicted extensional evaluation.
class KernelInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace coh
