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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coh/derivation.hpp"
#include "coh/error.hpp"
#include "coh/term.hpp"
#include "coh/type_expr.hpp"

namespace coh {

/// Operation field `name : args... -> result`.
struct OpField {
  std::string name;
  std::vector<TypeExpr> args;
  TypeExpr result = TypeExpr::app("?");
  SourceSpan span;

  std::size_t arity() const { return args.size(); }
  OpField instantiate(const ParamBinding& s) const;
  std::string signature() const;
};

struct BoundVar {
  std::string name;
  TypeExpr type = TypeExpr::app("?");
};

/// `forall (x y : M) (a : A), lhs = rhs`. Data only; checked semantically.
struct AxiomStmt {
  std::string name;
  std::vector<BoundVar> bound;
  Term lhs = Term::nat(0);
  Term rhs = Term::nat(0);
  SourceSpan span;
};

/// Bracketed requirement `[name : cls args]`; the name is optional.
struct Premise {
  std::string name;
  Constraint constraint;
  SourceSpan span;
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<Premise> premises;
  std::vector<Constraint> extendsList;
  std::vector<OpField> opFields;
  std::vector<AxiomStmt> axiomFields;
  SourceSpan span;
};

struct InstanceDecl {
  std::string name;
  std::vector<std::string> typeVars;
  std::vector<Premise> premises;
  Constraint head;
  std::vector<std::pair<std::string, Term>> opDefs;
  /// Lower is tried first. Unset means declaration order.
  std::optional<long> priority;
  /// Assumed instance with no bodies (`requires` or a goal hypothesis).
  bool opaque = false;
  /// Generated from an `extends` clause.
  bool synthetic = false;
  SourceSpan span;

  const Term* opDef(const std::string& field) const;
  std::vector<std::string> premiseNames() const;
};

/// Elaborated class: declaration plus the full field list including every
/// field inherited through `extends`.
struct ClassInfo {
  ClassDecl decl;
  std::vector<OpField> fields;

  const OpField* field(const std::string& name) const;
  bool hasField(const std::string& name) const { return field(name) != nullptr; }
  std::vector<std::string> premiseNames() const;
};

/// Class and instance declarations. Built single-threaded, then read-only.
class Registry {
 public:
  /// Registers `decl` and one projection instance per `extends` entry.
  void addClass(ClassDecl decl);
  void addInstance(InstanceDecl decl);

  /// Arity clashes, unknown symbols and axiom scoping problems. Empty means
  /// well formed.
  std::vector<Diagnostic> validate() const;

  const ClassInfo* findClass(const std::string& name) const;
  const ClassInfo& classInfo(const std::string& name) const;
  InstanceDeclPtr findInstance(const std::string& name) const;

  /// Instances in the order search tries them.
  const std::vector<InstanceDeclPtr>& instances() const { return instances_; }
  const std::vector<std::string>& classNames() const { return classOrder_; }

  /// Signature of `field` with the class parameters replaced by `c.args`.
  OpField fieldSignature(const Constraint& c, const std::string& field) const;
  /// Binding from the class parameters of `c.className` to `c.args`.
  ParamBinding paramBinding(const Constraint& c) const;

  /// Copy with opaque instances for the given hypotheses, tried before
  /// every declared instance.
  Registry withAssumptions(const std::vector<Premise>& assumptions) const;

 private:
  void insertInstance(InstanceDeclPtr inst);

  std::map<std::string, std::shared_ptr<const ClassInfo>> classes_;
  std::vector<std::string> classOrder_;
  std::map<std::string, InstanceDeclPtr> instanceByName_;
  std::vector<InstanceDeclPtr> instances_;
  std::vector<Diagnostic> deferred_;
  std::size_t seq_ = 0;
};

/// The scalar type every registry knows about.
inline constexpr const char* kNatType = "Nat";

}  // namespace coh
