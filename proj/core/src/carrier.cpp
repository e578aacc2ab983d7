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

#include "coh/carrier.hpp"

#include <algorithm>
#include <functional>

#include "coh/error.hpp"

namespace coh {

FiniteCarrier::FiniteCarrier(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

const std::string& FiniteCarrier::elementName(std::uint32_t index) const {
  static const std::string bad = "<out-of-range>";
  return index < elements_.size() ? elements_[index] : bad;
}

std::optional<std::uint32_t> FiniteCarrier::indexOf(const std::string& element) const {
  auto it = index_.find(element);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void FiniteCarrier::setOp(const std::string& op, OpTable table) { ops_[op] = std::move(table); }

const OpTable* FiniteCarrier::op(const std::string& name) const {
  auto it = ops_.find(name);
  return it == ops_.end() ? nullptr : &it->second;
}

std::uint32_t FiniteCarrier::apply(const std::string& name,
                                   const std::vector<std::uint32_t>& args) const {
  const OpTable* t = op(name);
  if (!t) throw EvalError("carrier " + name_ + " has no operation " + name);
  if (t->arity != args.size())
    throw EvalError("operation " + name + " of " + name_ + " takes " + std::to_string(t->arity) +
                    " arguments");
  std::size_t pos = 0;
  for (auto a : args) pos = pos * size() + a;
  return t->entries.at(pos);
}

std::uint32_t FiniteCarrier::at(std::uint32_t f, std::uint32_t x) const {
  if (shape_ != Shape::Function && shape_ != Shape::AddHom)
    throw EvalError("elements of " + name_ + " are not functions");
  return graph_.at(f).at(x);
}

std::optional<std::uint32_t> FiniteCarrier::encode(const std::vector<std::uint32_t>& values) const {
  auto it = byGraph_.find(values);
  if (it == byGraph_.end()) return std::nullopt;
  return it->second;
}

namespace {

using Law = std::function<std::optional<std::string>(const FiniteCarrier&)>;

std::string names(const FiniteCarrier& c, std::initializer_list<std::uint32_t> xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ", ") + c.elementName(x);
  return out;
}

std::optional<std::string> need(const FiniteCarrier& c, const char* op, std::size_t arity) {
  const OpTable* t = c.op(op);
  if (!t) return std::string("missing operation ") + op;
  if (t->arity != arity) return std::string("operation ") + op + " has the wrong arity";
  return std::nullopt;
}

std::optional<std::string> associative(const FiniteCarrier& c, const char* op) {
  if (auto e = need(c, op, 2)) return e;
  const std::uint32_t n = c.size();
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (c.apply(op, {c.apply(op, {x, y}), z}) != c.apply(op, {x, c.apply(op, {y, z})}))
          return std::string(op) + " is not associative at " + names(c, {x, y, z});
  return std::nullopt;
}

std::optional<std::string> commutative(const FiniteCarrier& c, const char* op) {
  if (auto e = need(c, op, 2)) return e;
  for (std::uint32_t x = 0; x < c.size(); ++x)
    for (std::uint32_t y = 0; y < c.size(); ++y)
      if (c.apply(op, {x, y}) != c.apply(op, {y, x}))
        return std::string(op) + " is not commutative at " + names(c, {x, y});
  return std::nullopt;
}

std::optional<std::string> identity(const FiniteCarrier& c, const char* op, const char* unit) {
  if (auto e = need(c, op, 2)) return e;
  if (auto e = need(c, unit, 0)) return e;
  const std::uint32_t u = c.apply(unit, {});
  for (std::uint32_t x = 0; x < c.size(); ++x)
    if (c.apply(op, {u, x}) != x || c.apply(op, {x, u}) != x)
      return std::string(unit) + " is not an identity for " + op + " at " + names(c, {x});
  return std::nullopt;
}

std::optional<std::string> semiringLaws(const FiniteCarrier& c) {
  const std::uint32_t n = c.size();
  const std::uint32_t z = c.apply("zero", {});
  for (std::uint32_t x = 0; x < n; ++x) {
    if (c.apply("mul", {z, x}) != z || c.apply("mul", {x, z}) != z)
      return "zero does not annihilate " + names(c, {x});
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t w = 0; w < n; ++w) {
        if (c.apply("mul", {x, c.apply("add", {y, w})}) !=
            c.apply("add", {c.apply("mul", {x, y}), c.apply("mul", {x, w})}))
          return "left distributivity fails at " + names(c, {x, y, w});
        if (c.apply("mul", {c.apply("add", {x, y}), w}) !=
            c.apply("add", {c.apply("mul", {x, w}), c.apply("mul", {y, w})}))
          return "right distributivity fails at " + names(c, {x, y, w});
      }
  }
  return std::nullopt;
}

const std::map<std::string, std::vector<Law>>& laws() {
  static const std::map<std::string, std::vector<Law>> table = [] {
    Law mulAssoc = [](const FiniteCarrier& c) { return associative(c, "mul"); };
    Law mulUnit = [](const FiniteCarrier& c) { return identity(c, "mul", "one"); };
    Law mulComm = [](const FiniteCarrier& c) { return commutative(c, "mul"); };
    Law addAssoc = [](const FiniteCarrier& c) { return associative(c, "add"); };
    Law addUnit = [](const FiniteCarrier& c) { return identity(c, "add", "zero"); };
    Law addComm = [](const FiniteCarrier& c) { return commutative(c, "add"); };
    std::map<std::string, std::vector<Law>> m;
    m["semigroup"] = {mulAssoc};
    m["monoid"] = {mulAssoc, mulUnit};
    m["comm_monoid"] = {mulAssoc, mulUnit, mulComm};
    m["add_comm_monoid"] = {addAssoc, addUnit, addComm};
    m["semiring"] = {addAssoc, addUnit, addComm, mulAssoc, mulUnit, semiringLaws};
    m["comm_semiring"] = {addAssoc, addUnit, addComm, mulAssoc, mulUnit, semiringLaws, mulComm};
    return m;
  }();
  return table;
}

std::string tupleName(const FiniteCarrier& base, const std::vector<std::uint32_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += base.elementName(values[i]);
  }
  return out + "]";
}

}  // namespace

std::optional<std::string> FiniteCarrier::validateDeclared() const {
  for (const auto& structure : declares) {
    auto it = laws().find(structure);
    if (it == laws().end()) return "unknown structure " + structure;
    for (const auto& law : it->second)
      if (auto failure = law(*this)) return structure + ": " + *failure;
  }
  return std::nullopt;
}

CarrierPtr makeIndexSet(const std::string& name, std::size_t n) {
  std::vector<std::string> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back("i" + std::to_string(i));
  return std::make_shared<FiniteCarrier>(name, std::move(elems));
}

namespace {

// Pointwise lift of every base operation of arity at most 2.
void liftPointwise(FiniteCarrier& out, const std::vector<std::vector<std::uint32_t>>& graph,
                   const FiniteCarrier& base, std::size_t width,
                   const std::function<std::optional<std::uint32_t>(const std::vector<std::uint32_t>&)>& encode,
                   const std::vector<std::string>& only) {
  const std::size_t n = graph.size();
  for (const auto& [name, table] : base.ops()) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    if (table.arity > 2) continue;
    OpTable lifted{table.arity, {}};
    std::vector<std::uint32_t> values(width);
    bool closed = true;
    auto emit = [&](const std::function<std::uint32_t(std::size_t)>& at) {
      for (std::size_t j = 0; j < width; ++j) values[j] = at(j);
      auto idx = encode(values);
      if (!idx) closed = false;
      lifted.entries.push_back(idx.value_or(0));
    };
    if (table.arity == 0) {
      emit([&](std::size_t) { return base.apply(name, {}); });
    } else if (table.arity == 1) {
      for (std::size_t f = 0; f < n; ++f) emit([&](std::size_t j) { return base.apply(name, {graph[f][j]}); });
    } else {
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
          emit([&](std::size_t j) { return base.apply(name, {graph[f][j], graph[g][j]}); });
    }
    if (closed) out.setOp(name, std::move(lifted));
  }
}

std::size_t checkedPower(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    n *= base;
    if (n > cap)
      throw CarrierTooLarge(what + " would exceed the element cap of " + std::to_string(cap));
  }
  return n;
}

}  // namespace

CarrierPtr buildFunctionCarrier(const CarrierPtr& index, const CarrierPtr& base, std::size_t cap) {
  const std::size_t width = index->size();
  const std::size_t k = base->size();
  const std::string name = "fn " + index->name() + " " + base->name();
  const std::size_t n = checkedPower(k, width, cap, name);

  std::vector<std::vector<std::uint32_t>> graph;
  graph.reserve(n);
  std::vector<std::string> elems;
  for (std::size_t code = 0; code < n; ++code) {
    // Index 0 is the most significant digit, so elements sort lexicographically.
    std::vector<std::uint32_t> values(width);
    std::size_t rest = code;
    for (std::size_t j = width; j-- > 0;) {
      values[j] = static_cast<std::uint32_t>(rest % k);
      rest /= k;
    }
    elems.push_back(tupleName(*base, values));
    graph.push_back(std::move(values));
  }

  auto out = std::make_shared<FiniteCarrier>(name, std::move(elems));
  out->shape_ = FiniteCarrier::Shape::Function;
  out->domain_ = index;
  out->codomain_ = base;
  for (std::uint32_t i = 0; i < graph.size(); ++i) out->byGraph_.emplace(graph[i], i);
  out->graph_ = graph;
  liftPointwise(*out, graph, *base, width, [&](const auto& v) { return out->encode(v); }, {});
  return out;
}

CarrierPtr buildAddHomCarrier(const CarrierPtr& a, const CarrierPtr& b, std::size_t cap) {
  for (const auto* c : {a.get(), b.get()})
    if (!c->hasOp("add") || !c->hasOp("zero"))
      throw EvalError("carrier " + c->name() + " has no additive structure");
  const std::string name = "add_hom " + a->name() + " " + b->name();
  const std::size_t width = a->size();
  const std::size_t k = b->size();
  // The filter enumerates every function first; bound that as well.
  const std::size_t total = checkedPower(k, width, std::max<std::size_t>(cap, 1) << 8, name);

  const std::uint32_t za = a->apply("zero", {});
  const std::uint32_t zb = b->apply("zero", {});
  std::vector<std::vector<std::uint32_t>> graph;
  std::vector<std::uint32_t> values(width);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t j = width; j-- > 0;) {
      values[j] = static_cast<std::uint32_t>(rest % k);
      rest /= k;
    }
    if (values[za] != zb) continue;
    bool additive = true;
    for (std::uint32_t x = 0; x < width && additive; ++x)
      for (std::uint32_t y = 0; y < width && additive; ++y)
        additive = values[a->apply("add", {x, y})] == b->apply("add", {values[x], values[y]});
    if (!additive) continue;
    graph.push_back(values);
    if (graph.size() > cap)
      throw CarrierTooLarge(name + " would exceed the element cap of " + std::to_string(cap));
  }

  std::vector<std::string> elems;
  for (const auto& g : graph) elems.push_back(tupleName(*b, g));
  auto out = std::make_shared<FiniteCarrier>(name, std::move(elems));
  out->shape_ = FiniteCarrier::Shape::AddHom;
  out->domain_ = a;
  out->codomain_ = b;
  for (std::uint32_t i = 0; i < graph.size(); ++i) out->byGraph_.emplace(graph[i], i);
  out->graph_ = graph;
  liftPointwise(*out, graph, *b, width, [&](const auto& v) { return out->encode(v); },
                {"add", "zero"});
  return out;
}

CarrierPtr buildOppositeCarrier(const CarrierPtr& c) {
  const OpTable* mul = c->op("mul");
  if (!mul || mul->arity != 2) throw EvalError("carrier " + c->name() + " has no mul");
  std::vector<std::string> elems;
  for (const auto& e : c->elements()) elems.push_back("op " + e);
  auto out = std::make_shared<FiniteCarrier>("opposite " + c->name(), std::move(elems));
  out->shape_ = FiniteCarrier::Shape::Opposite;
  out->domain_ = c;
  for (const auto& [name, table] : c->ops()) out->setOp(name, table);
  const std::size_t n = c->size();
  OpTable transposed{2, std::vector<std::uint32_t>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) transposed.entries[x * n + y] = mul->entries[y * n + x];
  out->setOp("mul", std::move(transposed));
  return out;
}

std::uint32_t natSmul(const FiniteCarrier& c, std::uint64_t n, std::uint32_t x) {
  std::uint32_t acc = c.apply("zero", {});
  for (std::uint64_t i = 0; i < n; ++i) acc = c.apply("add", {acc, x});
  return acc;
}

}  // namespace coh
