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

#include "coh/normalize.hpp"

#include <string>
#include <utility>
#include <vector>

#include "coh/derivation.hpp"
#include "coh/error.hpp"
#include "coh/registry.hpp"

namespace coh {

namespace {

class Normalizer {
 public:
  explicit Normalizer(std::size_t fuel) : budget_(fuel) {}

  Term full(const Term& t) {
    Term w = whnf(t);
    switch (w.kind()) {
      case Term::Kind::Lam: {
        Term body = full(w.body());
        return body.sameNode(w.body()) ? w : Term::lam(w.name(), std::move(body));
      }
      case Term::Kind::App: {
        Term fn = full(w.fn());
        Term arg = full(w.arg());
        if (fn.sameNode(w.fn()) && arg.sameNode(w.arg())) return w;
        return Term::app(std::move(fn), std::move(arg));
      }
      case Term::Kind::NatRec:
        return Term::natRec(full(w.zeroCase()), full(w.succCase()), full(w.scrutinee()));
      default: return w;
    }
  }

  std::size_t steps() const { return steps_; }

 private:
  void tick() {
    if (steps_ >= budget_) throw FuelExhausted(budget_);
    ++steps_;
  }

  static const Term* unfoldable(const Term& t) {
    if (!t.is(Term::Kind::Proj) || t.inst().kind != InstanceRef::Kind::Node) return nullptr;
    const DerivationPtr& d = t.inst().node;
    if (!d || !d->instance || d->instance->opaque) return nullptr;
    return d->instance->opDef(t.name());
  }

  // Weak head normal form. Arguments of a stuck application are untouched.
  Term whnf(Term t) {
    for (;;) {
      switch (t.kind()) {
        case Term::Kind::App: {
          Term fn = whnf(t.fn());
          if (fn.is(Term::Kind::Lam)) {
            tick();
            t = subst(fn.body(), fn.name(), t.arg());
            continue;
          }
          return fn.sameNode(t.fn()) ? t : Term::app(std::move(fn), t.arg());
        }
        case Term::Kind::Proj: {
          const Term* body = unfoldable(t);
          if (!body) return t;
          tick();
          t = wirePremises(*body, t.inst().node->children);
          continue;
        }
        case Term::Kind::NatRec: {
          Term n = whnf(t.scrutinee());
          if (!n.is(Term::Kind::NatLit)) return Term::natRec(t.zeroCase(), t.succCase(), std::move(n));
          tick();
          if (n.natValue() == 0) {
            t = t.zeroCase();
          } else {
            Term pred = Term::nat(n.natValue() - 1);
            t = Term::apps(t.succCase(), {pred, Term::natRec(t.zeroCase(), t.succCase(), pred)});
          }
          continue;
        }
        default: return t;
      }
    }
  }

  std::string fresh(const std::string& base) {
    std::string stem = base.substr(0, base.find('#'));
    return stem + "#" + std::to_string(++counter_);
  }

  Term subst(const Term& t, const std::string& x, const Term& v) {
    const auto fv = v.freeVars();
    return substWith(t, x, v, fv);
  }

  Term substWith(const Term& t, const std::string& x, const Term& v,
                 const std::set<std::string>& fv) {
    switch (t.kind()) {
      case Term::Kind::Var: return t.name() == x ? v : t;
      case Term::Kind::Lam: {
        if (t.name() == x || !t.body().hasFreeVar(x)) return t;
        if (fv.count(t.name())) {
          std::string renamed = fresh(t.name());
          while (fv.count(renamed) || t.body().hasFreeVar(renamed)) renamed = fresh(t.name());
          Term body = substWith(t.body(), t.name(), Term::var(renamed), {renamed});
          return Term::lam(renamed, substWith(body, x, v, fv));
        }
        return Term::lam(t.name(), substWith(t.body(), x, v, fv));
      }
      case Term::Kind::App:
        return Term::app(substWith(t.fn(), x, v, fv), substWith(t.arg(), x, v, fv));
      case Term::Kind::NatRec:
        return Term::natRec(substWith(t.zeroCase(), x, v, fv), substWith(t.succCase(), x, v, fv),
                            substWith(t.scrutinee(), x, v, fv));
      default: return t;
    }
  }

  std::size_t budget_;
  std::size_t steps_ = 0;
  std::size_t counter_ = 0;
};

using BinderStack = std::vector<std::pair<std::string, std::string>>;

bool alphaEq(const Term& a, const Term& b, BinderStack& binders) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        const bool left = it->first == a.name();
        const bool right = it->second == b.name();
        if (left || right) return left && right;
      }
      return a.name() == b.name();
    }
    case Term::Kind::Lam: {
      binders.emplace_back(a.name(), b.name());
      bool eq = alphaEq(a.body(), b.body(), binders);
      binders.pop_back();
      return eq;
    }
    case Term::Kind::App:
      return alphaEq(a.fn(), b.fn(), binders) && alphaEq(a.arg(), b.arg(), binders);
    case Term::Kind::NatRec:
      return alphaEq(a.zeroCase(), b.zeroCase(), binders) &&
             alphaEq(a.succCase(), b.succCase(), binders) &&
             alphaEq(a.scrutinee(), b.scrutinee(), binders);
    default: return a == b;
  }
}

}  // namespace

NormalForm normalize(const Term& t, const NormalizeOptions& options) {
  Normalizer n(options.fuel);
  Term out = n.full(t);
  return {std::move(out), n.steps()};
}

Term etaCollapse(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Lam: {
      Term body = etaCollapse(t.body());
      if (body.is(Term::Kind::App) && body.arg().is(Term::Kind::Var) &&
          body.arg().name() == t.name() && !body.fn().hasFreeVar(t.name()))
        return body.fn();
      return Term::lam(t.name(), std::move(body));
    }
    case Term::Kind::App: return Term::app(etaCollapse(t.fn()), etaCollapse(t.arg()));
    case Term::Kind::NatRec:
      return Term::natRec(etaCollapse(t.zeroCase()), etaCollapse(t.succCase()),
                          etaCollapse(t.scrutinee()));
    default: return t;
  }
}

bool alphaEquivalent(const Term& a, const Term& b) {
  BinderStack binders;
  return alphaEq(etaCollapse(a), etaCollapse(b), binders);
}

bool defeq(const Term& a, const Term& b, const NormalizeOptions& options) {
  return alphaEquivalent(normalize(a, options).term, normalize(b, options).term);
}

}  // namespace coh
