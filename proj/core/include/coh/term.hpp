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
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace coh {

struct Derivation;
class FiniteCarrier;
using DerivationPtr = std::shared_ptr<const Derivation>;
using CarrierPtr = std::shared_ptr<const FiniteCarrier>;

/// Target of a field projection.
///
/// Inside declarations a projection names either the enclosing class
/// (`Self`, axioms only) or one of the declaration's premises by position.
/// Once a derivation is built, premises are wired to concrete `Node`s.
struct InstanceRef {
  enum class Kind { Self, Premise, Node };

  Kind kind = Kind::Self;
  std::size_t premise = 0;
  DerivationPtr node;

  static InstanceRef self() { return {Kind::Self, 0, nullptr}; }
  static InstanceRef premiseAt(std::size_t i) { return {Kind::Premise, i, nullptr}; }
  static InstanceRef of(DerivationPtr d) { return {Kind::Node, 0, std::move(d)}; }
};

bool operator==(const InstanceRef& a, const InstanceRef& b);

/// A carrier element embedded in a term during evaluation.
struct ElementRef {
  CarrierPtr carrier;
  std::uint32_t index = 0;
};

/// Small applied lambda calculus used for operation bodies and axioms.
class Term {
 public:
  enum class Kind { Var, Lam, App, Proj, NatLit, NatRec, Const };

  static Term var(std::string name);
  static Term lam(std::string binder, Term body);
  static Term lams(const std::vector<std::string>& binders, Term body);
  static Term app(Term fn, Term arg);
  static Term apps(Term fn, const std::vector<Term>& args);
  static Term proj(InstanceRef inst, std::string field);
  static Term nat(std::uint64_t n);
  /// `succCase` takes the predecessor and the recursive result.
  static Term natRec(Term zeroCase, Term succCase, Term scrutinee);
  static Term constant(ElementRef element);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  /// Var name, Lam binder, or Proj field.
  const std::string& name() const;
  const Term& body() const;       // Lam
  const Term& fn() const;         // App
  const Term& arg() const;        // App
  const InstanceRef& inst() const;  // Proj
  std::uint64_t natValue() const;   // NatLit
  const Term& zeroCase() const;   // NatRec
  const Term& succCase() const;   // NatRec
  const Term& scrutinee() const;  // NatRec
  const ElementRef& element() const;  // Const

  std::set<std::string> freeVars() const;
  bool hasFreeVar(const std::string& name) const;
  std::size_t size() const;

  /// Same node in memory; a fast path for comparisons.
  bool sameNode(const Term& other) const { return node_ == other.node_; }

  /// Exact structural identity (binder names included).
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Replaces `Premise(i)` references with `Node(children[i])`.
Term wirePremises(const Term& t, const std::vector<DerivationPtr>& children);
/// Replaces `Self` with `self` and `Premise(i)` with `premises[i]`.
Term wireRefs(const Term& t, const DerivationPtr& self, const std::vector<DerivationPtr>& premises);

/// Surface syntax: `fun x y => body`, juxtaposition, `natrec z s n`.
/// `premiseNames` renders `Premise(i)` refs as `name.field` when non-empty.
std::string render(const Term& t, const std::vector<std::string>& premiseNames = {});

}  // namespace coh
