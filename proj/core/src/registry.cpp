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

#include "coh/registry.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace coh {

OpField OpField::instantiate(const ParamBinding& s) const {
  OpField out = *this;
  for (auto& a : out.args) a = s.apply(a);
  out.result = s.apply(result);
  return out;
}

std::string OpField::signature() const {
  std::string out;
  for (const auto& a : args) out += a.str() + " -> ";
  return out + result.str();
}

const Term* InstanceDecl::opDef(const std::string& field) const {
  for (const auto& [name, body] : opDefs)
    if (name == field) return &body;
  return nullptr;
}

std::vector<std::string> InstanceDecl::premiseNames() const {
  std::vector<std::string> out;
  for (const auto& p : premises) out.push_back(p.name);
  return out;
}

const OpField* ClassInfo::field(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name == name) return &f;
  return nullptr;
}

std::vector<std::string> ClassInfo::premiseNames() const {
  std::vector<std::string> out;
  for (const auto& p : decl.premises) out.push_back(p.name);
  return out;
}

namespace {

// Zero-argument constructors named like a declared variable become variables.
TypeExpr canonicalize(const TypeExpr& t, const std::set<std::string>& vars) {
  if (t.isVar()) return t;
  if (t.args().empty()) return vars.count(t.name()) ? TypeExpr::var(t.name()) : t;
  std::vector<TypeExpr> args;
  for (const auto& a : t.args()) args.push_back(canonicalize(a, vars));
  return TypeExpr::app(t.name(), std::move(args));
}

Constraint canonicalize(const Constraint& c, const std::set<std::string>& vars) {
  Constraint out{c.className, {}};
  for (const auto& a : c.args) out.args.push_back(canonicalize(a, vars));
  return out;
}

void checkScoped(const TypeExpr& t, const std::set<std::string>& params, const std::string& where) {
  if (t.isVar()) {
    if (!params.count(t.name()))
      throw DeclarationError(DeclErrorKind::UnscopedVariable,
                             "type variable " + t.name() + " not among the parameters of " + where);
    return;
  }
  if (t.args().empty() && t.name() != kNatType)
    throw DeclarationError(DeclErrorKind::UnscopedVariable,
                           "name " + t.name() + " not among the parameters of " + where);
  for (const auto& a : t.args()) checkScoped(a, params, where);
}

struct PremiseScope {
  std::string name;
  const ClassInfo* cls;
};

struct ElabScope {
  std::vector<PremiseScope> premises;
  const std::vector<OpField>* selfFields = nullptr;
  SourceSpan span;
  std::string owner;
  std::vector<Diagnostic>* diags = nullptr;
};

class Elaborator {
 public:
  explicit Elaborator(const ElabScope& scope) : scope_(scope) {}

  void bindOuter(const std::string& name) {
    used_.insert(name);
    renames_.emplace_back(name, name);
  }

  Term run(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        for (auto it = renames_.rbegin(); it != renames_.rend(); ++it)
          if (it->first == t.name()) return Term::var(it->second);
        return resolveField(t);
      }
      case Term::Kind::Lam: {
        std::string fresh = t.name();
        for (int k = 1; used_.count(fresh); ++k) fresh = t.name() + "_" + std::to_string(k);
        used_.insert(fresh);
        renames_.emplace_back(t.name(), fresh);
        Term body = run(t.body());
        renames_.pop_back();
        return Term::lam(fresh, std::move(body));
      }
      case Term::Kind::App: return Term::app(run(t.fn()), run(t.arg()));
      case Term::Kind::NatRec:
        return Term::natRec(run(t.zeroCase()), run(t.succCase()), run(t.scrutinee()));
      default: return t;
    }
  }

 private:
  void report(DiagCode code, std::string msg) {
    if (scope_.diags) scope_.diags->push_back({code, scope_.span, scope_.owner + ": " + msg});
  }

  Term resolveField(const Term& t) {
    const std::string& name = t.name();
    if (auto dot = name.rfind('.'); dot != std::string::npos) {
      std::string prefix = name.substr(0, dot);
      std::string field = name.substr(dot + 1);
      for (std::size_t i = 0; i < scope_.premises.size(); ++i) {
        const auto& p = scope_.premises[i];
        if (p.name.empty() || p.name != prefix) continue;
        if (p.cls && p.cls->hasField(field)) return Term::proj(InstanceRef::premiseAt(i), field);
        report(DiagCode::UnknownSymbol,
               "premise " + prefix + " has no operation named " + field);
        return t;
      }
    }
    if (scope_.selfFields) {
      for (const auto& f : *scope_.selfFields)
        if (f.name == name) return Term::proj(InstanceRef::self(), name);
    }
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < scope_.premises.size(); ++i)
      if (scope_.premises[i].cls && scope_.premises[i].cls->hasField(name)) hits.push_back(i);
    if (hits.size() == 1) return Term::proj(InstanceRef::premiseAt(hits[0]), name);
    if (hits.size() > 1) {
      report(DiagCode::AmbiguousSymbol,
             "operation " + name + " is provided by several premises; qualify it");
      return t;
    }
    report(DiagCode::UnknownSymbol, "unknown symbol " + name);
    return t;
  }

  const ElabScope& scope_;
  std::set<std::string> used_;
  std::vector<std::pair<std::string, std::string>> renames_;
};

std::set<std::string> varsOf(const Constraint& c) {
  std::set<std::string> out;
  for (const auto& a : c.args) a.collectVars(out);
  return out;
}

}  // namespace

const ClassInfo* Registry::findClass(const std::string& name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : it->second.get();
}

const ClassInfo& Registry::classInfo(const std::string& name) const {
  const ClassInfo* c = findClass(name);
  if (!c) throw DeclarationError(DeclErrorKind::UnknownClass, "unknown class " + name);
  return *c;
}

InstanceDeclPtr Registry::findInstance(const std::string& name) const {
  auto it = instanceByName_.find(name);
  return it == instanceByName_.end() ? nullptr : it->second;
}

ParamBinding Registry::paramBinding(const Constraint& c) const {
  return ParamBinding(classInfo(c.className).decl.params, c.args);
}

OpField Registry::fieldSignature(const Constraint& c, const std::string& field) const {
  const ClassInfo& info = classInfo(c.className);
  const OpField* f = info.field(field);
  if (!f)
    throw std::invalid_argument("class " + c.className + " has no operation " + field);
  return f->instantiate(paramBinding(c));
}

void Registry::addClass(ClassDecl decl) {
  if (classes_.count(decl.name))
    throw DeclarationError(DeclErrorKind::DuplicateClass, "class " + decl.name + " already declared");

  const std::set<std::string> params(decl.params.begin(), decl.params.end());
  const std::string where = "class " + decl.name;

  for (auto& p : decl.premises) {
    p.constraint = canonicalize(p.constraint, params);
    if (!findClass(p.constraint.className))
      throw DeclarationError(DeclErrorKind::UnknownClass,
                             where + " requires unknown class " + p.constraint.className);
    for (const auto& a : p.constraint.args) checkScoped(a, params, where);
  }
  for (auto& e : decl.extendsList) {
    e = canonicalize(e, params);
    if (!findClass(e.className))
      throw DeclarationError(DeclErrorKind::UnknownSuperclass,
                             where + " extends unknown class " + e.className);
    for (const auto& a : e.args) checkScoped(a, params, where);
  }
  std::set<std::string> names;
  for (auto& f : decl.opFields) {
    for (auto& a : f.args) {
      a = canonicalize(a, params);
      checkScoped(a, params, where);
    }
    f.result = canonicalize(f.result, params);
    checkScoped(f.result, params, where);
    if (!names.insert(f.name).second)
      throw DeclarationError(DeclErrorKind::DuplicateField, where + " repeats field " + f.name);
  }
  std::set<std::string> axiomNames;
  for (auto& ax : decl.axiomFields) {
    for (auto& b : ax.bound) {
      b.type = canonicalize(b.type, params);
      checkScoped(b.type, params, where);
    }
    if (!axiomNames.insert(ax.name).second)
      throw DeclarationError(DeclErrorKind::DuplicateField, where + " repeats axiom " + ax.name);
  }

  // Full field list: own fields, then inherited ones merged by name.
  auto info = std::make_shared<ClassInfo>();
  info->fields = decl.opFields;
  for (const auto& e : decl.extendsList) {
    const ClassInfo& parent = classInfo(e.className);
    for (const auto& pf : parent.fields) {
      OpField inherited = fieldSignature(e, pf.name);
      if (const OpField* existing = info->field(pf.name)) {
        if (existing->args != inherited.args || !(existing->result == inherited.result))
          throw DeclarationError(DeclErrorKind::FieldConflict,
                                 where + " inherits conflicting signatures for " + pf.name);
        continue;
      }
      info->fields.push_back(std::move(inherited));
    }
  }

  ElabScope scope;
  for (const auto& p : decl.premises) scope.premises.push_back({p.name, findClass(p.constraint.className)});
  scope.selfFields = &info->fields;
  scope.diags = &deferred_;
  for (auto& ax : decl.axiomFields) {
    scope.span = ax.span;
    scope.owner = where + " axiom " + ax.name;
    Elaborator elab(scope);
    for (const auto& b : ax.bound) elab.bindOuter(b.name);
    ax.lhs = elab.run(ax.lhs);
    ax.rhs = elab.run(ax.rhs);
  }

  info->decl = std::move(decl);
  const ClassInfo& stored = *info;
  classes_.emplace(stored.decl.name, info);
  classOrder_.push_back(stored.decl.name);

  std::vector<TypeExpr> selfArgs;
  for (const auto& p : stored.decl.params) selfArgs.push_back(TypeExpr::var(p));
  for (const auto& e : stored.decl.extendsList) {
    InstanceDecl proj;
    proj.name = stored.decl.name + ".to_" + e.className;
    proj.typeVars = stored.decl.params;
    proj.premises.push_back({"", Constraint{stored.decl.name, selfArgs}, stored.decl.span});
    proj.head = e;
    for (const auto& pf : classInfo(e.className).fields)
      proj.opDefs.emplace_back(pf.name, Term::proj(InstanceRef::premiseAt(0), pf.name));
    proj.synthetic = true;
    proj.span = stored.decl.span;
    addInstance(std::move(proj));
  }
}

void Registry::addInstance(InstanceDecl decl) {
  if (instanceByName_.count(decl.name))
    throw DeclarationError(DeclErrorKind::DuplicateInstance,
                           "instance " + decl.name + " already declared");
  const std::string where = "instance " + decl.name;
  const std::set<std::string> vars(decl.typeVars.begin(), decl.typeVars.end());

  decl.head = canonicalize(decl.head, vars);
  const ClassInfo* head = findClass(decl.head.className);
  if (!head)
    throw DeclarationError(DeclErrorKind::UnknownClass,
                           where + " targets unknown class " + decl.head.className);
  for (auto& p : decl.premises) {
    p.constraint = canonicalize(p.constraint, vars);
    if (!findClass(p.constraint.className))
      throw DeclarationError(DeclErrorKind::UnknownClass,
                             where + " requires unknown class " + p.constraint.className);
  }

  const std::set<std::string> headVars = varsOf(decl.head);
  for (const auto& p : decl.premises)
    for (const auto& v : varsOf(p.constraint))
      if (!headVars.count(v))
        throw DeclarationError(DeclErrorKind::AmbiguousVariable,
                               where + ": premise " + p.constraint.str() + " mentions " + v +
                                   ", which the head does not determine");

  if (decl.opaque) {
    if (!decl.opDefs.empty())
      throw DeclarationError(DeclErrorKind::ExtraOpDef, where + " is assumed and cannot define operations");
  } else {
    std::set<std::string> seen;
    for (const auto& [field, body] : decl.opDefs) {
      if (!head->hasField(field) || !seen.insert(field).second)
        throw DeclarationError(DeclErrorKind::ExtraOpDef,
                               where + " defines " + field + ", which " + head->decl.name +
                                   " does not declare (or defines it twice)");
    }
    for (const auto& f : head->fields)
      if (!seen.count(f.name))
        throw DeclarationError(DeclErrorKind::MissingOpDef,
                               where + " does not define " + f.name);

    ElabScope scope;
    for (const auto& p : decl.premises)
      scope.premises.push_back({p.name, findClass(p.constraint.className)});
    scope.diags = &deferred_;
    scope.span = decl.span;
    for (auto& [field, body] : decl.opDefs) {
      scope.owner = where + " field " + field;
      Elaborator elab(scope);
      body = elab.run(body);
    }
  }

  auto ptr = std::make_shared<InstanceDecl>(std::move(decl));
  insertInstance(ptr);
}

void Registry::insertInstance(InstanceDeclPtr inst) {
  const long prio = inst->priority.value_or(static_cast<long>(seq_));
  ++seq_;
  // Stable: among equal priorities, earlier declarations stay first.
  auto pos = std::upper_bound(instances_.begin(), instances_.end(), prio,
                              [&](long p, const InstanceDeclPtr& other) {
                                return p < other->priority.value_or(LONG_MAX);
                              });
  auto stored = std::make_shared<InstanceDecl>(*inst);
  stored->priority = prio;
  instances_.insert(pos, stored);
  instanceByName_.emplace(stored->name, stored);
}

Registry Registry::withAssumptions(const std::vector<Premise>& assumptions) const {
  Registry out = *this;
  long prio = LONG_MIN / 2;
  for (const auto& a : assumptions) {
    InstanceDecl inst;
    inst.name = a.name.empty() ? "[" + a.constraint.str() + "]" : a.name;
    inst.head = a.constraint;
    inst.opaque = true;
    inst.priority = prio++;
    inst.span = a.span;
    out.addInstance(std::move(inst));
  }
  return out;
}

std::vector<Diagnostic> Registry::validate() const {
  std::vector<Diagnostic> out = deferred_;

  struct Use {
    std::size_t arity;
    SourceSpan span;
  };
  std::map<std::string, std::vector<Use>> ctorUses;
  auto noteType = [&](const TypeExpr& t, const SourceSpan& span) {
    std::vector<std::pair<std::string, std::size_t>> ctors;
    t.collectCtors(ctors);
    for (const auto& [name, arity] : ctors) ctorUses[name].push_back({arity, span});
  };
  auto noteConstraint = [&](const Constraint& c, const SourceSpan& span) {
    for (const auto& a : c.args) noteType(a, span);
    const ClassInfo* cls = findClass(c.className);
    if (cls && cls->decl.params.size() != c.args.size())
      out.push_back({DiagCode::ArityClash, span,
                     "class " + c.className + " expects " +
                         std::to_string(cls->decl.params.size()) + " arguments, got " +
                         std::to_string(c.args.size()) + " in " + c.str()});
  };

  for (const auto& name : classOrder_) {
    const ClassInfo& info = *classes_.at(name);
    const ClassDecl& d = info.decl;
    for (const auto& p : d.premises) noteConstraint(p.constraint, p.span);
    for (const auto& e : d.extendsList) noteConstraint(e, d.span);
    for (const auto& f : d.opFields) {
      for (const auto& a : f.args) noteType(a, f.span);
      noteType(f.result, f.span);
    }
    const std::set<std::string> params(d.params.begin(), d.params.end());
    for (const auto& ax : d.axiomFields) {
      for (const auto& b : ax.bound) {
        noteType(b.type, ax.span);
        std::set<std::string> vs;
        b.type.collectVars(vs);
        for (const auto& v : vs)
          if (!params.count(v))
            out.push_back({DiagCode::AxiomScope, ax.span,
                           "axiom " + ax.name + " binds " + b.name + " over unscoped " + v});
      }
    }
  }
  for (const auto& inst : instances_) {
    if (inst->synthetic) continue;
    for (const auto& p : inst->premises) noteConstraint(p.constraint, p.span);
    noteConstraint(inst->head, inst->span);
  }

  for (const auto& [name, uses] : ctorUses) {
    std::set<std::size_t> arities;
    for (const auto& u : uses) arities.insert(u.arity);
    if (arities.size() <= 1) continue;
    std::string list;
    for (auto a : arities) list += (list.empty() ? "" : ", ") + std::to_string(a);
    out.push_back({DiagCode::ArityClash, uses.front().span,
                   "type constructor " + name + " used with arities " + list});
  }
  return out;
}

}  // namespace coh
