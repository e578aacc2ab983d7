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

#include "coh/eval.hpp"

#include <algorithm>
#include <set>

#include "coh/error.hpp"

namespace coh {

struct Callable {
  enum class Kind { Closure, CarrierOp, NatOp, CarrierNsmul };

  Kind kind = Kind::Closure;
  std::string binder;
  std::optional<Term> body;
  EnvPtr env;
  std::string op;
  CarrierPtr carrier;
  std::size_t arity = 0;
  std::vector<Value> args;
};

Value Value::element(CarrierPtr carrier, std::uint32_t index) {
  Value v;
  v.kind_ = Kind::Element;
  v.carrier_ = std::move(carrier);
  v.index_ = index;
  return v;
}

Value Value::nat(std::uint64_t n) {
  Value v;
  v.kind_ = Kind::Nat;
  v.nat_ = n;
  return v;
}

Value Value::function(std::shared_ptr<const Callable> fn) {
  Value v;
  v.kind_ = Kind::Function;
  v.fn_ = std::move(fn);
  return v;
}

std::string Value::str() const {
  switch (kind_) {
    case Kind::Element: return carrier_->elementName(index_);
    case Kind::Nat: return std::to_string(nat_);
    case Kind::Function: return "<fun>";
  }
  return "?";
}

EnvPtr bind(EnvPtr env, std::string name, Value value) {
  return std::make_shared<const Env>(Env{std::move(name), std::move(value), std::move(env)});
}

namespace {

bool functionShaped(const CarrierPtr& c) {
  return c->shape() == FiniteCarrier::Shape::Function || c->shape() == FiniteCarrier::Shape::AddHom;
}

// The opposite of a carrier shares its element indices.
bool sameElements(const CarrierPtr& a, const CarrierPtr& b) {
  if (a == b) return true;
  auto base = [](const CarrierPtr& c) {
    return c->shape() == FiniteCarrier::Shape::Opposite ? c->domain() : c;
  };
  return base(a) == base(b);
}

TypeExpr codomainType(const TypeExpr& t) { return t.args().at(1); }

}  // namespace

Evaluator::Evaluator(const Registry& reg, Bindings bindings, EvalOptions options)
    : reg_(reg), bindings_(std::move(bindings)), options_(options) {}

std::uint64_t Evaluator::recursionLimit() const {
  const std::uint64_t k = options_.scalarRange;
  return std::max(k * k, 2 * k);
}

Domain Evaluator::domain(const TypeExpr& type) {
  const std::string key = type.str();
  if (auto it = domains_.find(key); it != domains_.end()) return it->second;
  if (type.isVar()) throw EvalError("type variable " + type.name() + " has no carrier");

  auto carrierOf = [&](const TypeExpr& t) {
    Domain d = domain(t);
    if (d.isNat) throw EvalError("Nat is infinite and cannot appear inside " + type.str());
    return d.carrier;
  };

  Domain out;
  const auto& args = type.args();
  if (args.empty()) {
    if (type.name() == kNatType) {
      out.isNat = true;
    } else {
      auto it = bindings_.find(type.name());
      if (it == bindings_.end() || !it->second)
        throw EvalError("type " + type.name() + " is not bound to a carrier");
      out.carrier = it->second;
    }
  } else if (type.name() == "fn" && args.size() == 2) {
    out.carrier = buildFunctionCarrier(carrierOf(args[0]), carrierOf(args[1]), options_.elementCap);
  } else if (type.name() == "add_hom" && args.size() == 2) {
    out.carrier = buildAddHomCarrier(carrierOf(args[0]), carrierOf(args[1]), options_.elementCap);
  } else if (type.name() == "opposite" && args.size() == 1) {
    out.carrier = buildOppositeCarrier(carrierOf(args[0]));
  } else {
    throw EvalError("no finite model for type " + type.str());
  }
  domains_.emplace(key, out);
  return out;
}

std::vector<Value> Evaluator::enumerate(const TypeExpr& type) {
  Domain d = domain(type);
  std::vector<Value> out;
  if (d.isNat) {
    for (std::uint64_t n = 0; n <= options_.scalarRange; ++n) out.push_back(Value::nat(n));
    return out;
  }
  for (std::uint32_t i = 0; i < d.carrier->size(); ++i) out.push_back(Value::element(d.carrier, i));
  return out;
}

std::uint32_t Evaluator::toElement(const Value& v, const CarrierPtr& carrier) {
  if (v.kind() == Value::Kind::Element && sameElements(v.carrier(), carrier)) return v.index();
  if (v.kind() == Value::Kind::Nat)
    throw EvalError("expected an element of " + carrier->name() + ", got the number " + v.str());
  if (!functionShaped(carrier))
    throw EvalError("expected an element of " + carrier->name() + ", got " +
                    (v.kind() == Value::Kind::Function ? std::string("a function")
                                                       : "an element of " + v.carrier()->name()));
  const CarrierPtr& dom = carrier->domain();
  std::vector<std::uint32_t> graph;
  graph.reserve(dom->size());
  for (std::uint32_t j = 0; j < dom->size(); ++j)
    graph.push_back(toElement(apply(v, Value::element(dom, j)), carrier->codomain()));
  auto idx = carrier->encode(graph);
  if (!idx) throw EvalError("function is not an element of " + carrier->name());
  return *idx;
}

bool Evaluator::equalAt(const TypeExpr& type, const Value& a, const Value& b) {
  Domain d = domain(type);
  if (d.isNat) {
    if (a.kind() != Value::Kind::Nat || b.kind() != Value::Kind::Nat)
      throw EvalError("expected numbers at type Nat");
    return a.natValue() == b.natValue();
  }
  if (functionShaped(d.carrier)) {
    const CarrierPtr& dom = d.carrier->domain();
    const TypeExpr cod = codomainType(type);
    for (std::uint32_t j = 0; j < dom->size(); ++j) {
      Value x = Value::element(dom, j);
      if (!equalAt(cod, apply(a, x), apply(b, x))) return false;
    }
    return true;
  }
  return toElement(a, d.carrier) == toElement(b, d.carrier);
}

std::string Evaluator::show(const TypeExpr& type, const Value& v) {
  Domain d = domain(type);
  if (d.isNat) return v.str();
  if (functionShaped(d.carrier)) {
    const CarrierPtr& dom = d.carrier->domain();
    const TypeExpr cod = codomainType(type);
    std::string out = "[";
    for (std::uint32_t j = 0; j < dom->size(); ++j) {
      if (j) out += ',';
      out += show(cod, apply(v, Value::element(dom, j)));
    }
    return out + "]";
  }
  return d.carrier->elementName(toElement(v, d.carrier));
}

Value Evaluator::primitive(const Domain& dom, const std::string& field, const std::string& owner) {
  auto callable = [](Callable::Kind kind, std::string op, CarrierPtr c, std::size_t arity) {
    auto fn = std::make_shared<Callable>();
    fn->kind = kind;
    fn->op = std::move(op);
    fn->carrier = std::move(c);
    fn->arity = arity;
    return Value::function(std::move(fn));
  };
  if (dom.isNat) {
    if (field == "zero") return Value::nat(0);
    if (field == "one") return Value::nat(1);
    if (field == "add" || field == "mul" || field == "nsmul")
      return callable(Callable::Kind::NatOp, field, nullptr, 2);
    throw EvalError("Nat has no built-in operation " + field + " (needed by " + owner + ")");
  }
  const CarrierPtr& c = dom.carrier;
  if (const OpTable* t = c->op(field)) {
    if (t->arity == 0) return Value::element(c, c->apply(field, {}));
    return callable(Callable::Kind::CarrierOp, field, c, t->arity);
  }
  if (field == "nsmul" && c->hasOp("add") && c->hasOp("zero"))
    return callable(Callable::Kind::CarrierNsmul, field, c, 2);
  throw EvalError("carrier " + c->name() + " has no table for " + field + " (needed by " + owner + ")");
}

Value Evaluator::project(const DerivationPtr& d, const std::string& field) {
  auto key = std::make_pair(d, field);
  if (auto it = projections_.find(key); it != projections_.end()) return it->second;
  Value out;
  if (d->instance->opaque) {
    if (d->goal.args.size() != 1)
      throw EvalError("assumed instance " + d->instanceName() + " ranges over " +
                      std::to_string(d->goal.args.size()) + " types; only one is supported");
    out = primitive(domain(d->goal.args[0]), field, d->instanceName());
  } else {
    const Term* body = d->instance->opDef(field);
    if (!body) throw EvalError("instance " + d->instanceName() + " does not define " + field);
    out = evalTerm(wirePremises(*body, d->children));
  }
  projections_.emplace(std::move(key), out);
  return out;
}

Value Evaluator::evalTerm(const Term& t, const EnvPtr& env) {
  switch (t.kind()) {
    case Term::Kind::Var:
      for (const Env* e = env.get(); e; e = e->parent.get())
        if (e->name == t.name()) return e->value;
      throw UnboundVariable("unbound variable " + t.name());
    case Term::Kind::Lam: {
      auto fn = std::make_shared<Callable>();
      fn->binder = t.name();
      fn->body = t.body();
      fn->env = env;
      return Value::function(std::move(fn));
    }
    case Term::Kind::App: {
      Value f = evalTerm(t.fn(), env);
      return apply(f, evalTerm(t.arg(), env));
    }
    case Term::Kind::Proj:
      if (t.inst().kind != InstanceRef::Kind::Node || !t.inst().node)
        throw EvalError("projection " + t.name() + " is not wired to an instance");
      return project(t.inst().node, t.name());
    case Term::Kind::NatLit: return Value::nat(t.natValue());
    case Term::Kind::NatRec: {
      Value n = evalTerm(t.scrutinee(), env);
      if (n.kind() != Value::Kind::Nat) throw EvalError("natrec on a non-number");
      if (n.natValue() > recursionLimit())
        throw ScalarOutOfRange("natrec scrutinee " + n.str() + " exceeds the limit " +
                               std::to_string(recursionLimit()));
      Value acc = evalTerm(t.zeroCase(), env);
      Value succ = evalTerm(t.succCase(), env);
      for (std::uint64_t k = 0; k < n.natValue(); ++k) acc = applyAll(succ, {Value::nat(k), acc});
      return acc;
    }
    case Term::Kind::Const: return Value::element(t.element().carrier, t.element().index);
  }
  throw EvalError("unknown term");
}

Value Evaluator::applyAll(Value f, const std::vector<Value>& args) {
  for (const auto& a : args) f = apply(f, a);
  return f;
}

Value Evaluator::apply(const Value& f, const Value& x) {
  if (f.kind() == Value::Kind::Element) {
    if (!functionShaped(f.carrier()))
      throw EvalError("element " + f.str() + " of " + f.carrier()->name() + " is not a function");
    const CarrierPtr& dom = f.carrier()->domain();
    return Value::element(f.carrier()->codomain(), f.carrier()->at(f.index(), toElement(x, dom)));
  }
  if (f.kind() == Value::Kind::Nat) throw EvalError("cannot apply the number " + f.str());

  const Callable& fn = *f.callable();
  if (fn.kind == Callable::Kind::Closure) return evalTerm(*fn.body, bind(fn.env, fn.binder, x));

  if (fn.args.size() + 1 < fn.arity) {
    auto partial = std::make_shared<Callable>(fn);
    partial->args.push_back(x);
    return Value::function(std::move(partial));
  }
  std::vector<Value> args = fn.args;
  args.push_back(x);

  auto natArg = [&](const Value& v) {
    if (v.kind() != Value::Kind::Nat) throw EvalError("operation " + fn.op + " expects a number");
    return v.natValue();
  };
  switch (fn.kind) {
    case Callable::Kind::NatOp: {
      std::uint64_t a = natArg(args[0]);
      std::uint64_t b = natArg(args[1]);
      return Value::nat(fn.op == "add" ? a + b : a * b);
    }
    case Callable::Kind::CarrierNsmul: {
      std::uint64_t n = natArg(args[0]);
      if (n > recursionLimit())
        throw ScalarOutOfRange("scalar " + std::to_string(n) + " exceeds the limit " +
                               std::to_string(recursionLimit()));
      return Value::element(fn.carrier, natSmul(*fn.carrier, n, toElement(args[1], fn.carrier)));
    }
    case Callable::Kind::CarrierOp: {
      std::vector<std::uint32_t> idx;
      for (const auto& a : args) idx.push_back(toElement(a, fn.carrier));
      return Value::element(fn.carrier, fn.carrier->apply(fn.op, idx));
    }
    case Callable::Kind::Closure: break;
  }
  throw EvalError("bad callable");
}

std::optional<TypeExpr> Evaluator::inferType(const Term& t,
                                             const std::map<std::string, TypeExpr>& bound) const {
  std::size_t n = 0;
  const Term* head = &t;
  while (head->is(Term::Kind::App)) {
    ++n;
    head = &head->fn();
  }
  auto peel = [](TypeExpr type, std::size_t k) -> std::optional<TypeExpr> {
    for (; k > 0; --k) {
      if (type.isVar() || type.args().size() != 2 ||
          (type.name() != "fn" && type.name() != "add_hom"))
        return std::nullopt;
      type = type.args()[1];
    }
    return type;
  };
  switch (head->kind()) {
    case Term::Kind::Var: {
      auto it = bound.find(head->name());
      if (it == bound.end()) return std::nullopt;
      return peel(it->second, n);
    }
    case Term::Kind::NatLit:
    case Term::Kind::NatRec:
      if (n == 0 && head->is(Term::Kind::NatLit)) return TypeExpr::app(kNatType);
      return std::nullopt;
    case Term::Kind::Proj: {
      if (head->inst().kind != InstanceRef::Kind::Node || !head->inst().node) return std::nullopt;
      OpField sig = reg_.fieldSignature(head->inst().node->goal, head->name());
      if (n < sig.arity()) return std::nullopt;
      return peel(sig.result, n - sig.arity());
    }
    default: return std::nullopt;
  }
}

const char* toString(AxiomReport::Status s) {
  switch (s) {
    case AxiomReport::Status::Holds: return "holds";
    case AxiomReport::Status::Fails: return "fails";
    case AxiomReport::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

AxiomReport checkAxiom(Evaluator& ev, const ClassInfo& cls, const std::vector<TypeExpr>& args,
                       const AxiomStmt& ax, const DerivationPtr& self,
                       const std::vector<DerivationPtr>& premises) {
  AxiomReport r;
  r.className = cls.decl.name;
  r.axiomName = ax.name;
  const ParamBinding pb(cls.decl.params, args);

  std::vector<TypeExpr> types;
  std::map<std::string, TypeExpr> bound;
  for (const auto& b : ax.bound) {
    types.push_back(pb.apply(b.type));
    bound.insert_or_assign(b.name, types.back());
  }
  try {
    std::vector<std::vector<Value>> domains;
    r.assignments = 1;
    for (const auto& t : types) {
      domains.push_back(ev.enumerate(t));
      r.assignments *= domains.back().size();
    }
    const Term lhs = wireRefs(ax.lhs, self, premises);
    const Term rhs = wireRefs(ax.rhs, self, premises);
    std::optional<TypeExpr> side = ev.inferType(lhs, bound);
    if (!side) side = ev.inferType(rhs, bound);

    auto equal = [&](const Value& a, const Value& b) {
      if (side) return ev.equalAt(*side, a, b);
      if (a.kind() == Value::Kind::Nat && b.kind() == Value::Kind::Nat) return a.natValue() == b.natValue();
      if (a.kind() == Value::Kind::Element && b.kind() == Value::Kind::Element)
        return a.carrier() == b.carrier() && a.index() == b.index();
      throw EvalError("cannot compare the two sides of " + ax.name + " without a type");
    };
    auto render = [&](const Value& v) { return side ? ev.show(*side, v) : v.str(); };

    std::vector<std::size_t> pos(types.size(), 0);
    for (std::uint64_t count = 0; count < r.assignments; ++count) {
      EnvPtr env;
      for (std::size_t i = 0; i < types.size(); ++i) env = bind(env, ax.bound[i].name, domains[i][pos[i]]);
      Value l = ev.evalTerm(lhs, env);
      Value rv = ev.evalTerm(rhs, env);
      if (!equal(l, rv)) {
        ++r.failures;
        if (!r.counterexample) {
          Assignment a;
          for (std::size_t i = 0; i < types.size(); ++i)
            a.values.emplace_back(ax.bound[i].name, ev.show(types[i], domains[i][pos[i]]));
          a.lhs = render(l);
          a.rhs = render(rv);
          r.counterexample = std::move(a);
        }
      }
      // Odometer with the first variable most significant.
      for (std::size_t i = types.size(); i-- > 0;) {
        if (++pos[i] < domains[i].size()) break;
        pos[i] = 0;
      }
    }
  } catch (const Error& e) {
    r.status = AxiomReport::Status::Inconclusive;
    r.message = e.what();
    return r;
  } catch (const std::invalid_argument& e) {
    r.status = AxiomReport::Status::Inconclusive;
    r.message = e.what();
    return r;
  }
  r.status = r.failures ? AxiomReport::Status::Fails : AxiomReport::Status::Holds;
  return r;
}

std::vector<AxiomReport> checkAxioms(const DerivationPtr& d, const Bindings& bindings,
                                     const Registry& reg, const EvalOptions& options,
                                     const ResolveOptions& search) {
  Evaluator ev(reg, bindings, options);
  struct Item {
    const ClassInfo* cls;
    Constraint goal;
    DerivationPtr node;
  };
  std::vector<Item> items{{&reg.classInfo(d->goal.className), d->goal, d}};
  std::set<Constraint> seen{d->goal};
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item it = items[i];
    const ParamBinding pb(it.cls->decl.params, it.goal.args);
    for (const auto& e : it.cls->decl.extendsList) {
      Constraint parent = pb.apply(e);
      if (!seen.insert(parent).second) continue;
      auto node = applyInstance(reg, it.cls->decl.name + ".to_" + e.className, parent, {it.node});
      items.push_back({&reg.classInfo(parent.className), parent, node});
    }
  }

  std::vector<AxiomReport> out;
  for (const auto& it : items) {
    if (it.cls->decl.axiomFields.empty()) continue;
    const ParamBinding pb(it.cls->decl.params, it.goal.args);
    std::vector<DerivationPtr> premises;
    std::string missing;
    for (const auto& p : it.cls->decl.premises) {
      try {
        premises.push_back(resolve(pb.apply(p.constraint), reg, search));
      } catch (const Error& e) {
        missing = e.what();
        break;
      }
    }
    for (const auto& ax : it.cls->decl.axiomFields) {
      if (!missing.empty()) {
        AxiomReport r;
        r.className = it.cls->decl.name;
        r.axiomName = ax.name;
        r.status = AxiomReport::Status::Inconclusive;
        r.message = "class premise unavailable: " + missing;
        out.push_back(std::move(r));
        continue;
      }
      out.push_back(checkAxiom(ev, *it.cls, it.goal.args, ax, it.node, premises));
    }
  }
  return out;
}

CorrespondenceReport checkOfModuleCorrespondence(const CarrierPtr& r, const CarrierPtr& a,
                                                 const DerivationPtr& module, const Registry& reg,
                                                 const EvalOptions& options,
                                                 const ResolveOptions& search) {
  const Constraint& goal = module->goal;
  if (goal.className != "module" || goal.args.size() != 2)
    throw std::invalid_argument("expected a derivation of module R A, got " + goal.str());
  const TypeExpr rType = goal.args[0];
  const TypeExpr aType = goal.args[1];
  Bindings bindings;
  if (!rType.isVar() && rType.args().empty() && rType.name() != kNatType) bindings[rType.name()] = r;
  if (!aType.isVar() && aType.args().empty()) {
    if (bindings.count(aType.name()) && bindings[aType.name()] != a)
      throw std::invalid_argument("R and A are the same type but bound to different carriers");
    bindings[aType.name()] = a;
  }
  Evaluator ev(reg, bindings, options);

  DerivationPtr hasMul = resolve(Constraint{"has_mul", {aType}}, reg, search);
  DerivationPtr selfAction =
      applyInstance(reg, "has_mul.to_has_scalar", Constraint{"has_scalar", {aType, aType}}, {hasMul});

  auto mul = [&](Term x, Term y) {
    return Term::apps(Term::proj(InstanceRef::of(hasMul), "mul"), {std::move(x), std::move(y)});
  };
  auto smul = [&](Term x, Term y) {
    return Term::apps(Term::proj(InstanceRef::of(module), "smul"), {std::move(x), std::move(y)});
  };
  const Term vr = Term::var("r");
  const Term vx = Term::var("x");
  const Term vy = Term::var("y");

  ClassInfo adhoc;
  adhoc.decl.name = "of_module";
  auto law = [&](std::string name, Term lhs, Term rhs) {
    AxiomStmt ax;
    ax.name = std::move(name);
    ax.bound = {{"r", rType}, {"x", aType}, {"y", aType}};
    ax.lhs = std::move(lhs);
    ax.rhs = std::move(rhs);
    return checkAxiom(ev, adhoc, {}, ax, nullptr, {});
  };

  auto classAxiom = [&](const std::string& cls, const std::string& axiom,
                        const std::vector<DerivationPtr>& premises) {
    const ClassInfo& info = reg.classInfo(cls);
    for (const auto& ax : info.decl.axiomFields)
      if (ax.name == axiom) return checkAxiom(ev, info, {rType, aType, aType}, ax, nullptr, premises);
    throw std::invalid_argument("class " + cls + " has no axiom " + axiom);
  };

  CorrespondenceReport out;
  out.h1 = law("h1", mul(smul(vr, vx), vy), smul(vr, mul(vx, vy)));
  out.smulAssoc = classAxiom("is_scalar_tower", "smul_assoc", {module, selfAction, module});
  out.h2 = law("h2", smul(vr, mul(vx, vy)), mul(vx, smul(vr, vy)));
  out.smulComm = classAxiom("smul_comm_class", "smul_comm", {module, selfAction});
  return out;
}

}  // namespace coh
