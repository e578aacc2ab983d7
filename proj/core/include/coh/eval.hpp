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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coh/carrier.hpp"
#include "coh/registry.hpp"
#include "coh/resolver.hpp"

namespace coh {

struct EvalOptions {
  /// Scalars of type Nat range over [0, scalarRange].
  std::uint64_t scalarRange = 8;
  std::size_t elementCap = kDefaultElementCap;
};

/// Type atoms bound to carriers. `Nat` is built in and never bound.
using Bindings = std::map<std::string, CarrierPtr>;

struct Env;
using EnvPtr = std::shared_ptr<const Env>;
struct Callable;

/// Runtime value: a carrier element, a natural number, or a function.
class Value {
 public:
  enum class Kind { Element, Nat, Function };

  static Value element(CarrierPtr carrier, std::uint32_t index);
  static Value nat(std::uint64_t n);
  static Value function(std::shared_ptr<const Callable> fn);

  Kind kind() const { return kind_; }
  const CarrierPtr& carrier() const { return carrier_; }
  std::uint32_t index() const { return index_; }
  std::uint64_t natValue() const { return nat_; }
  const std::shared_ptr<const Callable>& callable() const { return fn_; }

  /// Element name, numeral, or `<fun>`.
  std::string str() const;

 private:
  Kind kind_ = Kind::Nat;
  CarrierPtr carrier_;
  std::uint32_t index_ = 0;
  std::uint64_t nat_ = 0;
  std::shared_ptr<const Callable> fn_;
};

struct Env {
  std::string name;
  Value value;
  EnvPtr parent;
};

EnvPtr bind(EnvPtr env, std::string name, Value value);

/// Semantic domain of a ground type: the built-in naturals or a carrier.
struct Domain {
  bool isNat = false;
  CarrierPtr carrier;
};

/// Denotational evaluator over finite carriers.
///
/// Projections out of assumed instances read the carrier tables of the
/// instance's type argument; `nsmul` falls back to repeated addition when a
/// carrier has no table for it. Not thread-safe: derived carriers and
/// projection values are cached.
class Evaluator {
 public:
  Evaluator(const Registry& reg, Bindings bindings, EvalOptions options = {});

  /// Throws UnboundVariable, ScalarOutOfRange or EvalError.
  Value evalTerm(const Term& t, const EnvPtr& env = nullptr);
  Value apply(const Value& f, const Value& x);
  Value applyAll(Value f, const std::vector<Value>& args);

  /// Builds derived carriers for `fn`, `add_hom` and `opposite`. Throws
  /// EvalError for unbound atoms, CarrierTooLarge past the cap.
  Domain domain(const TypeExpr& type);
  /// Every value of a ground type, in index order.
  std::vector<Value> enumerate(const TypeExpr& type);
  /// Extensional equality at `type`.
  bool equalAt(const TypeExpr& type, const Value& a, const Value& b);
  /// Index of `v` in `carrier`, tabulating functions when needed.
  std::uint32_t toElement(const Value& v, const CarrierPtr& carrier);
  /// Rendering at a type: element names, numerals, tabulated functions.
  std::string show(const TypeExpr& type, const Value& v);

  /// Result type of a fully applied operation projection, when evident.
  std::optional<TypeExpr> inferType(const Term& t, const std::map<std::string, TypeExpr>& bound) const;

  const Registry& registry() const { return reg_; }
  const EvalOptions& options() const { return options_; }
  /// Largest scrutinee `natrec` accepts.
  std::uint64_t recursionLimit() const;

 private:
  Value project(const DerivationPtr& d, const std::string& field);
  Value primitive(const Domain& dom, const std::string& field, const std::string& owner);

  const Registry& reg_;
  Bindings bindings_;
  EvalOptions options_;
  std::map<std::string, Domain> domains_;
  std::map<std::pair<DerivationPtr, std::string>, Value> projections_;
};

struct Assignment {
  std::vector<std::pair<std::string, std::string>> values;  // variable, rendered value
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  enum class Status { Holds, Fails, Inconclusive };

  std::string className;
  std::string axiomName;
  Status status = Status::Holds;
  /// Product of the domain sizes of the bound variables.
  std::uint64_t assignments = 0;
  std::uint64_t failures = 0;
  /// First failing assignment in enumeration order.
  std::optional<Assignment> counterexample;
  /// Reason for an inconclusive verdict.
  std::string message;
};

const char* toString(AxiomReport::Status s);

/// Checks every axiom of the goal class of `d` and of its transitive
/// `extends` parents over all assignments. Class premises are found by
/// search. Evaluation errors produce Inconclusive reports.
std::vector<AxiomReport> checkAxioms(const DerivationPtr& d, const Bindings& bindings,
                                     const Registry& reg, const EvalOptions& options = {},
                                     const ResolveOptions& search = {});

/// Checks one axiom with its class premises and Self wired by the caller.
AxiomReport checkAxiom(Evaluator& ev, const ClassInfo& cls, const std::vector<TypeExpr>& args,
                       const AxiomStmt& ax, const DerivationPtr& self,
                       const std::vector<DerivationPtr>& premises);

struct CorrespondenceReport {
  AxiomReport h1;          // (r . x) * y = r . (x * y)
  AxiomReport smulAssoc;   // is_scalar_tower R A A
  AxiomReport h2;          // r . (x * y) = x * (r . y)
  AxiomReport smulComm;    // smul_comm_class R A A
  bool assocAgrees() const { return h1.status == smulAssoc.status; }
  bool commAgrees() const { return h2.status == smulComm.status; }
};

/// Compares the two compatibility laws of a module over an algebra with the
/// tower and commutation axioms, using `has_mul.to_has_scalar` for the action
/// of A on itself. `module` proves `module R A` for atoms bound to `r`, `a`.
CorrespondenceReport checkOfModuleCorrespondence(const CarrierPtr& r, const CarrierPtr& a,
                                                 const DerivationPtr& module, const Registry& reg,
                                                 const EvalOptions& options = {},
                                                 const ResolveOptions& search = {});

}  // namespace coh
