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
#include <vector>

#include "coh/term.hpp"

namespace coh {

/// Total operation table. Arity 0 holds one entry; arity n holds |E|^n
/// entries in row-major order of the arguments.
struct OpTable {
  std::size_t arity = 0;
  std::vector<std::uint32_t> entries;
};

/// Default bound on the size of derived carriers.
inline constexpr std::size_t kDefaultElementCap = 256;

/// Named finite set with operation tables.
///
/// Derived carriers remember how they were built: function and additive-hom
/// carriers keep the graph of every element so values can be applied, and
/// opposite carriers share element indices with their base.
class FiniteCarrier {
 public:
  enum class Shape { Plain, Function, AddHom, Opposite };

  FiniteCarrier(std::string name, std::vector<std::string> elements);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const std::string& elementName(std::uint32_t index) const;
  std::optional<std::uint32_t> indexOf(const std::string& element) const;

  void setOp(const std::string& op, OpTable table);
  const OpTable* op(const std::string& name) const;
  bool hasOp(const std::string& name) const { return op(name) != nullptr; }
  const std::map<std::string, OpTable>& ops() const { return ops_; }
  /// Throws EvalError when `op` is missing or the argument count is wrong.
  std::uint32_t apply(const std::string& op, const std::vector<std::uint32_t>& args) const;

  /// Structures named on the `declares` line, checked by validateDeclared.
  std::vector<std::string> declares;

  /// Empty when every declared structure holds; otherwise the first law that
  /// fails, with the witnessing elements.
  std::optional<std::string> validateDeclared() const;

  Shape shape() const { return shape_; }
  /// Function and AddHom: index set and codomain. Opposite: base in `domain`.
  const std::shared_ptr<const FiniteCarrier>& domain() const { return domain_; }
  const std::shared_ptr<const FiniteCarrier>& codomain() const { return codomain_; }
  /// Value of function element `f` at domain element `x`.
  std::uint32_t at(std::uint32_t f, std::uint32_t x) const;
  /// Element whose graph is `values`, if it belongs to this carrier.
  std::optional<std::uint32_t> encode(const std::vector<std::uint32_t>& values) const;

  friend CarrierPtr buildFunctionCarrier(const CarrierPtr&, const CarrierPtr&, std::size_t);
  friend CarrierPtr buildAddHomCarrier(const CarrierPtr&, const CarrierPtr&, std::size_t);
  friend CarrierPtr buildOppositeCarrier(const CarrierPtr&);

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::map<std::string, std::uint32_t> index_;
  std::map<std::string, OpTable> ops_;
  Shape shape_ = Shape::Plain;
  CarrierPtr domain_;
  CarrierPtr codomain_;
  std::vector<std::vector<std::uint32_t>> graph_;
  std::map<std::vector<std::uint32_t>, std::uint32_t> byGraph_;
};

/// Index set `{i0, ..., i(n-1)}` with no operations.
CarrierPtr makeIndexSet(const std::string& name, std::size_t n);

/// All functions index -> base with pointwise tables. Throws CarrierTooLarge.
CarrierPtr buildFunctionCarrier(const CarrierPtr& index, const CarrierPtr& base,
                                std::size_t cap = kDefaultElementCap);
/// Functions A -> B preserving zero and addition, with pointwise add and
/// zero. Throws CarrierTooLarge, or EvalError when A or B lacks add/zero.
CarrierPtr buildAddHomCarrier(const CarrierPtr& a, const CarrierPtr& b,
                              std::size_t cap = kDefaultElementCap);
/// Same elements, `mul` transposed. Throws EvalError when `c` has no mul.
CarrierPtr buildOppositeCarrier(const CarrierPtr& c);

/// `n`-fold addition of `x`, zero for n = 0.
std::uint32_t natSmul(const FiniteCarrier& c, std::uint64_t n, std::uint32_t x);

}  // namespace coh
