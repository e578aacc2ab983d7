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

#include "coh/type_expr.hpp"

#include <utility>

#include "coh/error.hpp"

namespace coh {

struct TypeExpr::Node {
  bool isVar = false;
  std::string name;
  std::vector<TypeExpr> args;
};

TypeExpr TypeExpr::var(std::string name) {
  return TypeExpr(std::make_shared<const Node>(Node{true, std::move(name), {}}));
}

TypeExpr TypeExpr::app(std::string ctor, std::vector<TypeExpr> args) {
  return TypeExpr(std::make_shared<const Node>(Node{false, std::move(ctor), std::move(args)}));
}

bool TypeExpr::isVar() const { return node_->isVar; }
const std::string& TypeExpr::name() const { return node_->name; }
const std::vector<TypeExpr>& TypeExpr::args() const { return node_->args; }

bool TypeExpr::isGround() const {
  if (isVar()) return false;
  for (const auto& a : args())
    if (!a.isGround()) return false;
  return true;
}

bool TypeExpr::occurs(const std::string& var) const {
  if (isVar()) return name() == var;
  for (const auto& a : args())
    if (a.occurs(var)) return true;
  return false;
}

void TypeExpr::collectVars(std::set<std::string>& out) const {
  if (isVar()) {
    out.insert(name());
    return;
  }
  for (const auto& a : args()) a.collectVars(out);
}

void TypeExpr::collectCtors(std::vector<std::pair<std::string, std::size_t>>& out) const {
  if (isVar()) return;
  out.emplace_back(name(), args().size());
  for (const auto& a : args()) a.collectCtors(out);
}

std::size_t TypeExpr::size() const {
  std::size_t n = 1;
  for (const auto& a : args()) n += a.size();
  return n;
}

std::string TypeExpr::str() const { return str(false); }

std::string TypeExpr::str(bool nested) const {
  if (isVar() || args().empty()) return name();
  std::string out = name();
  for (const auto& a : args()) {
    out += ' ';
    out += a.str(true);
  }
  return nested ? "(" + out + ")" : out;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.isVar() != b.isVar() || a.name() != b.name() || a.args().size() != b.args().size())
    return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

std::strong_ordering operator<=>(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.isVar() <=> b.isVar(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool Constraint::isGround() const {
  for (const auto& a : args)
    if (!a.isGround()) return false;
  return true;
}

std::string Constraint::str() const {
  return TypeExpr::app(className, args).str();
}

std::strong_ordering operator<=>(const Constraint& a, const Constraint& b) {
  if (auto c = a.className <=> b.className; c != 0) return c;
  return TypeExpr::app("", a.args) <=> TypeExpr::app("", b.args);
}

const TypeExpr* Substitution::find(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

void Substitution::bind(const std::string& var, const TypeExpr& image) {
  Substitution single;
  single.map_.emplace(var, image);
  for (auto& [name, img] : map_) img = single.apply(img);
  map_.insert_or_assign(var, image);
}

TypeExpr Substitution::apply(const TypeExpr& t) const {
  if (map_.empty()) return t;
  if (t.isVar()) {
    const TypeExpr* img = find(t.name());
    return img ? *img : t;
  }
  if (t.args().empty()) return t;
  std::vector<TypeExpr> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(apply(a));
  return TypeExpr::app(t.name(), std::move(args));
}

Constraint Substitution::apply(const Constraint& c) const {
  Constraint out{c.className, {}};
  out.args.reserve(c.args.size());
  for (const auto& a : c.args) out.args.push_back(apply(a));
  return out;
}

Substitution Substitution::compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [v, img] : inner.map_) out.map_.emplace(v, outer.apply(img));
  for (const auto& [v, img] : outer.map_) out.map_.emplace(v, img);
  return out;
}

std::string Substitution::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, img] : map_) {
    if (!first) out += ", ";
    first = false;
    out += v + " := " + img.str();
  }
  return out + "}";
}

ParamBinding::ParamBinding(const std::vector<std::string>& params,
                           const std::vector<TypeExpr>& args) {
  for (std::size_t i = 0; i < params.size() && i < args.size(); ++i) map_.emplace(params[i], args[i]);
}

TypeExpr ParamBinding::apply(const TypeExpr& t) const {
  if (t.isVar()) {
    auto it = map_.find(t.name());
    return it == map_.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<TypeExpr> args;
  for (const auto& a : t.args()) args.push_back(apply(a));
  return TypeExpr::app(t.name(), std::move(args));
}

Constraint ParamBinding::apply(const Constraint& c) const {
  Constraint out{c.className, {}};
  for (const auto& a : c.args) out.args.push_back(apply(a));
  return out;
}

TypeExpr applySubst(const Substitution& s, const TypeExpr& t) { return s.apply(t); }

std::optional<Substitution> tryUnify(const std::vector<TypeExpr>& as,
                                     const std::vector<TypeExpr>& bs, UnifyFailure* why) {
  auto fail = [&](UnifyFailureKind kind, std::string msg) -> std::optional<Substitution> {
    if (why) *why = {kind, std::move(msg)};
    return std::nullopt;
  };
  if (as.size() != bs.size()) return fail(UnifyFailureKind::Clash, "argument count mismatch");

  Substitution s;
  std::vector<std::pair<TypeExpr, TypeExpr>> work;
  for (std::size_t i = as.size(); i-- > 0;) work.emplace_back(as[i], bs[i]);

  while (!work.empty()) {
    auto [x, y] = std::move(work.back());
    work.pop_back();
    x = s.apply(x);
    y = s.apply(y);
    if (x == y) continue;
    if (!x.isVar() && y.isVar()) std::swap(x, y);
    if (x.isVar()) {
      if (y.occurs(x.name()))
        return fail(UnifyFailureKind::Occurs, x.name() + " occurs in " + y.str());
      s.bind(x.name(), y);
      continue;
    }
    if (x.name() != y.name() || x.args().size() != y.args().size())
      return fail(UnifyFailureKind::Clash, "cannot unify " + x.str() + " with " + y.str());
    for (std::size_t i = x.args().size(); i-- > 0;) work.emplace_back(x.args()[i], y.args()[i]);
  }
  return s;
}

std::optional<Substitution> tryUnify(const TypeExpr& a, const TypeExpr& b, UnifyFailure* why) {
  return tryUnify(std::vector<TypeExpr>{a}, std::vector<TypeExpr>{b}, why);
}

Substitution unify(const TypeExpr& a, const TypeExpr& b) {
  UnifyFailure why;
  auto s = tryUnify(a, b, &why);
  if (s) return std::move(*s);
  if (why.kind == UnifyFailureKind::Occurs) throw OccursError(why.message);
  throw ClashError(why.message);
}

}  // namespace coh
