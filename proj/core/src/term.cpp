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

#include "coh/term.hpp"

#include <functional>
#include <stdexcept>

#include "coh/carrier.hpp"
#include "coh/derivation.hpp"
#include "coh/registry.hpp"

namespace coh {

struct Term::Node {
  Kind kind;
  std::string name;
  std::vector<Term> kids;
  InstanceRef inst;
  std::uint64_t nat = 0;
  ElementRef element;
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}, 0, {}}));
}

Term Term::lam(std::string binder, Term body) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Lam, std::move(binder), {std::move(body)}, {}, 0, {}}));
}

Term Term::lams(const std::vector<std::string>& binders, Term body) {
  for (std::size_t i = binders.size(); i-- > 0;) body = lam(binders[i], std::move(body));
  return body;
}

Term Term::app(Term fn, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{Kind::App, {}, {std::move(fn), std::move(arg)}, {}, 0, {}}));
}

Term Term::apps(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

Term Term::proj(InstanceRef inst, std::string field) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Proj, std::move(field), {}, std::move(inst), 0, {}}));
}

Term Term::nat(std::uint64_t n) {
  return Term(std::make_shared<const Node>(Node{Kind::NatLit, {}, {}, {}, n, {}}));
}

Term Term::natRec(Term zeroCase, Term succCase, Term scrutinee) {
  return Term(std::make_shared<const Node>(Node{
      Kind::NatRec, {}, {std::move(zeroCase), std::move(succCase), std::move(scrutinee)}, {}, 0,
      {}}));
}

Term Term::constant(ElementRef element) {
  return Term(std::make_shared<const Node>(Node{Kind::Const, {}, {}, {}, 0, std::move(element)}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::body() const { return node_->kids.at(0); }
const Term& Term::fn() const { return node_->kids.at(0); }
const Term& Term::arg() const { return node_->kids.at(1); }
const InstanceRef& Term::inst() const { return node_->inst; }
std::uint64_t Term::natValue() const { return node_->nat; }
const Term& Term::zeroCase() const { return node_->kids.at(0); }
const Term& Term::succCase() const { return node_->kids.at(1); }
const Term& Term::scrutinee() const { return node_->kids.at(2); }
const ElementRef& Term::element() const { return node_->element; }

namespace {

void collectFree(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      for (const auto& b : bound)
        if (b == t.name()) return;
      out.insert(t.name());
      return;
    case Term::Kind::Lam:
      bound.push_back(t.name());
      collectFree(t.body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::App:
      collectFree(t.fn(), bound, out);
      collectFree(t.arg(), bound, out);
      return;
    case Term::Kind::NatRec:
      collectFree(t.zeroCase(), bound, out);
      collectFree(t.succCase(), bound, out);
      collectFree(t.scrutinee(), bound, out);
      return;
    default:
      return;
  }
}

bool freeIn(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.name() == name;
    case Term::Kind::Lam: return t.name() != name && freeIn(t.body(), name);
    case Term::Kind::App: return freeIn(t.fn(), name) || freeIn(t.arg(), name);
    case Term::Kind::NatRec:
      return freeIn(t.zeroCase(), name) || freeIn(t.succCase(), name) ||
             freeIn(t.scrutinee(), name);
    default: return false;
  }
}

}  // namespace

std::set<std::string> Term::freeVars() const {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collectFree(*this, bound, out);
  return out;
}

bool Term::hasFreeVar(const std::string& name) const { return freeIn(*this, name); }

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& k : node_->kids) n += k.size();
  return n;
}

bool operator==(const InstanceRef& a, const InstanceRef& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case InstanceRef::Kind::Self: return true;
    case InstanceRef::Kind::Premise: return a.premise == b.premise;
    case InstanceRef::Kind::Node:
      return a.node == b.node || (a.node && b.node && sameDerivation(*a.node, *b.node));
  }
  return false;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.name() == b.name();
    case Term::Kind::Lam: return a.name() == b.name() && a.body() == b.body();
    case Term::Kind::App: return a.fn() == b.fn() && a.arg() == b.arg();
    case Term::Kind::Proj: return a.name() == b.name() && a.inst() == b.inst();
    case Term::Kind::NatLit: return a.natValue() == b.natValue();
    case Term::Kind::NatRec:
      return a.zeroCase() == b.zeroCase() && a.succCase() == b.succCase() &&
             a.scrutinee() == b.scrutinee();
    case Term::Kind::Const:
      return a.element().carrier == b.element().carrier && a.element().index == b.element().index;
  }
  return false;
}

namespace {

Term mapRefs(const Term& t, const std::function<InstanceRef(const InstanceRef&)>& f) {
  switch (t.kind()) {
    case Term::Kind::Lam: {
      Term body = mapRefs(t.body(), f);
      return body.sameNode(t.body()) ? t : Term::lam(t.name(), std::move(body));
    }
    case Term::Kind::App: {
      Term fn = mapRefs(t.fn(), f);
      Term arg = mapRefs(t.arg(), f);
      if (fn.sameNode(t.fn()) && arg.sameNode(t.arg())) return t;
      return Term::app(std::move(fn), std::move(arg));
    }
    case Term::Kind::NatRec:
      return Term::natRec(mapRefs(t.zeroCase(), f), mapRefs(t.succCase(), f),
                          mapRefs(t.scrutinee(), f));
    case Term::Kind::Proj: return Term::proj(f(t.inst()), t.name());
    default: return t;
  }
}

}  // namespace

Term wirePremises(const Term& t, const std::vector<DerivationPtr>& children) {
  return mapRefs(t, [&](const InstanceRef& r) {
    if (r.kind != InstanceRef::Kind::Premise) return r;
    if (r.premise >= children.size())
      throw std::invalid_argument("premise reference out of range");
    return InstanceRef::of(children[r.premise]);
  });
}

Term wireRefs(const Term& t, const DerivationPtr& self, const std::vector<DerivationPtr>& premises) {
  return mapRefs(t, [&](const InstanceRef& r) {
    switch (r.kind) {
      case InstanceRef::Kind::Self:
        if (!self) throw std::invalid_argument("unwired Self reference");
        return InstanceRef::of(self);
      case InstanceRef::Kind::Premise:
        if (r.premise >= premises.size() || !premises[r.premise])
          throw std::invalid_argument("unwired premise reference");
        return InstanceRef::of(premises[r.premise]);
      case InstanceRef::Kind::Node: return r;
    }
    return r;
  });
}

namespace {

enum class Prec { Lam, App, Atom };

std::string renderRef(const InstanceRef& r, const std::string& field,
                      const std::vector<std::string>& premiseNames) {
  switch (r.kind) {
    case InstanceRef::Kind::Self: return field;
    case InstanceRef::Kind::Premise:
      if (r.premise < premiseNames.size() && !premiseNames[r.premise].empty())
        return premiseNames[r.premise] + "." + field;
      return "$" + std::to_string(r.premise) + "." + field;
    case InstanceRef::Kind::Node:
      return (r.node ? r.node->instanceName() : std::string("?")) + "." + field;
  }
  return field;
}

std::string renderAt(const Term& t, Prec ctx, const std::vector<std::string>& names) {
  auto wrap = [&](std::string s, Prec own) { return own < ctx ? "(" + s + ")" : s; };
  switch (t.kind()) {
    case Term::Kind::Var: return t.name();
    case Term::Kind::NatLit: return std::to_string(t.natValue());
    case Term::Kind::Proj: return renderRef(t.inst(), t.name(), names);
    case Term::Kind::Const: {
      const auto& e = t.element();
      if (!e.carrier) return "<?>";
      return e.carrier->elementName(e.index);
    }
    case Term::Kind::Lam: {
      std::string out = "fun";
      const Term* cur = &t;
      while (cur->is(Term::Kind::Lam)) {
        out += ' ' + cur->name();
        cur = &cur->body();
      }
      out += " => " + renderAt(*cur, Prec::Lam, names);
      return wrap(std::move(out), Prec::Lam);
    }
    case Term::Kind::App: {
      std::string out = renderAt(t.fn(), Prec::App, names) + ' ' +
                        renderAt(t.arg(), Prec::Atom, names);
      return wrap(std::move(out), Prec::App);
    }
    case Term::Kind::NatRec: {
      std::string out = "natrec " + renderAt(t.zeroCase(), Prec::Atom, names) + ' ' +
                        renderAt(t.succCase(), Prec::Atom, names) + ' ' +
                        renderAt(t.scrutinee(), Prec::Atom, names);
      return wrap(std::move(out), Prec::App);
    }
  }
  return "?";
}

}  // namespace

std::string render(const Term& t, const std::vector<std::string>& premiseNames) {
  return renderAt(t, Prec::Lam, premiseNames);
}

}  // namespace coh
