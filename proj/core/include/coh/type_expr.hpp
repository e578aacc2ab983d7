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

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coh {

/// First-order type expression: a variable, or a constructor applied to
/// arguments. Opaque atoms such as `iota` are zero-argument constructors.
///
/// Nodes are immutable and shared, so copies are cheap.
class TypeExpr {
 public:
  static TypeExpr var(std::string name);
  static TypeExpr app(std::string ctor, std::vector<TypeExpr> args = {});

  bool isVar() const;
  /// Variable name, or constructor name for applications.
  const std::string& name() const;
  const std::vector<TypeExpr>& args() const;

  bool isGround() const;
  bool occurs(const std::string& var) const;
  void collectVars(std::set<std::string>& out) const;
  /// Every constructor with the arity it is used at, in visiting order.
  void collectCtors(std::vector<std::pair<std::string, std::size_t>>& out) const;
  std::size_t size() const;

  /// Parenthesized only where juxtaposition needs it: `fn iota (add_hom A B)`.
  std::string str() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend std::strong_ordering operator<=>(const TypeExpr& a, const TypeExpr& b);

 private:
  struct Node;
  explicit TypeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::string str(bool nested) const;

  std::shared_ptr<const Node> node_;
};

/// A class name applied to type arguments, e.g. `module Nat (fn iota B)`.
struct Constraint {
  std::string className;
  std::vector<TypeExpr> args;

  bool isGround() const;
  std::string str() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend std::strong_ordering operator<=>(const Constraint& a, const Constraint& b);
};

/// Finite map from type-variable names to type expressions. Kept idempotent:
/// no mapped variable occurs in any image.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, TypeExpr>& bindings() const { return map_; }
  const TypeExpr* find(const std::string& var) const;

  /// Adds `var := image`, rewriting existing images so the map stays
  /// idempotent. The caller guarantees `var` does not occur in `image`.
  void bind(const std::string& var, const TypeExpr& image);

  TypeExpr apply(const TypeExpr& t) const;
  Constraint apply(const Constraint& c) const;

  /// `(outer ∘ inner)(t) == outer.apply(inner.apply(t))`.
  static Substitution compose(const Substitution& outer, const Substitution& inner);

  std::string str() const;
  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, TypeExpr> map_;
};

/// Simultaneous replacement of named variables, used to instantiate class
/// parameters. Unlike Substitution, images may mention the replaced names.
class ParamBinding {
 public:
  ParamBinding() = default;
  ParamBinding(const std::vector<std::string>& params, const std::vector<TypeExpr>& args);

  TypeExpr apply(const TypeExpr& t) const;
  Constraint apply(const Constraint& c) const;
  const std::map<std::string, TypeExpr>& bindings() const { return map_; }

 private:
  std::map<std::string, TypeExpr> map_;
};

TypeExpr applySubst(const Substitution& s, const TypeExpr& t);

enum class UnifyFailureKind { Clash, Occurs };

struct UnifyFailure {
  UnifyFailureKind kind = UnifyFailureKind::Clash;
  std::string message;
};

/// Robinson unification with the occurs check always on. Returns the most
/// general unifier, or nullopt with the reason written to `why`.
std::optional<Substitution> tryUnify(const TypeExpr& a, const TypeExpr& b,
                                     UnifyFailure* why = nullptr);
std::optional<Substitution> tryUnify(const std::vector<TypeExpr>& as,
                                     const std::vector<TypeExpr>& bs,
                                     UnifyFailure* why = nullptr);

/// Throwing form: ClashError or OccursError.
Substitution unify(const TypeExpr& a, const TypeExpr& b);

}  // namespace coh
