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

#include "coh/resolver.hpp"

#include <stdexcept>

#include "coh/error.hpp"

namespace coh {

namespace {

struct PathNode {
  const Constraint* goal;
  const PathNode* parent;
};

bool onPath(const PathNode* path, const Constraint& goal) {
  for (; path; path = path->parent)
    if (*path->goal == goal) return true;
  return false;
}

class Search {
 public:
  Search(const Registry& reg, std::size_t depth) : reg_(reg), depth_(depth) {}

  // Returns false once the visitor asked to stop.
  bool solve(const Constraint& goal, std::size_t remaining, const PathNode* path,
             const DerivationVisitor& k) {
    if (onPath(path, goal)) return true;
    if (remaining == 0) {
      truncated_ = true;
      return true;
    }
    const PathNode here{&goal, path};
    for (const auto& inst : reg_.instances()) {
      if (inst->head.className != goal.className) continue;
      auto s = tryUnify(inst->head.args, goal.args);
      if (!s) continue;
      std::vector<Constraint> premises;
      for (const auto& p : inst->premises) premises.push_back(s->apply(p.constraint));
      std::vector<DerivationPtr> children;
      bool go = solvePremises(premises, 0, children, remaining - 1, &here,
                              [&](std::vector<DerivationPtr> kids) {
                                auto d = std::make_shared<Derivation>();
                                d->instance = inst;
                                d->goal = goal;
                                d->subst = *s;
                                d->children = std::move(kids);
                                return k(d);
                              });
      if (!go) return false;
    }
    return true;
  }

  bool truncated() const { return truncated_; }

 private:
  using Done = std::function<bool(std::vector<DerivationPtr>)>;

  bool solvePremises(const std::vector<Constraint>& premises, std::size_t i,
                     std::vector<DerivationPtr>& children, std::size_t remaining,
                     const PathNode* path, const Done& done) {
    if (i == premises.size()) return done(children);
    return solve(premises[i], remaining, path, [&](const DerivationPtr& child) {
      children.push_back(child);
      bool go = solvePremises(premises, i + 1, children, remaining, path, done);
      children.pop_back();
      return go;
    });
  }

  const Registry& reg_;
  std::size_t depth_;
  bool truncated_ = false;
};

}  // namespace

bool searchDerivations(const Constraint& goal, const Registry& reg, const ResolveOptions& options,
                       const DerivationVisitor& visit) {
  Search search(reg, options.depth);
  search.solve(goal, options.depth, nullptr, visit);
  return search.truncated();
}

DerivationPtr resolve(const Constraint& goal, const Registry& reg, const ResolveOptions& options) {
  DerivationPtr found;
  bool truncated = searchDerivations(goal, reg, options, [&](const DerivationPtr& d) {
    found = d;
    return false;
  });
  if (found) return found;
  if (truncated)
    throw DepthExceeded("no instance for " + goal.str() + " within depth " +
                        std::to_string(options.depth));
  throw NoInstance("no instance for " + goal.str());
}

Resolution resolveAll(const Constraint& goal, const Registry& reg, const ResolveOptions& options) {
  Resolution out;
  out.truncated = searchDerivations(goal, reg, options, [&](const DerivationPtr& d) {
    out.derivations.push_back(d);
    return true;
  });
  return out;
}

Term derivationTerm(const DerivationPtr& d, const std::string& field, const Registry& reg) {
  if (!d || !d->instance) throw std::invalid_argument("empty derivation");
  const ClassInfo& cls = reg.classInfo(d->goal.className);
  if (!cls.hasField(field))
    throw std::invalid_argument("class " + cls.decl.name + " has no operation " + field);
  if (d->instance->opaque) return Term::proj(InstanceRef::of(d), field);
  const Term* body = d->instance->opDef(field);
  if (!body) throw std::invalid_argument("instance " + d->instance->name + " does not define " + field);
  return wirePremises(*body, d->children);
}

DerivationPtr applyInstance(const Registry& reg, const std::string& instance, const Constraint& goal,
                            std::vector<DerivationPtr> children) {
  InstanceDeclPtr inst = reg.findInstance(instance);
  if (!inst) throw std::invalid_argument("unknown instance " + instance);
  if (inst->head.className != goal.className)
    throw std::invalid_argument(instance + " does not prove " + goal.str());
  auto s = tryUnify(inst->head.args, goal.args);
  if (!s) throw std::invalid_argument(instance + " does not prove " + goal.str());
  if (children.size() != inst->premises.size())
    throw std::invalid_argument(instance + " takes " + std::to_string(inst->premises.size()) +
                                " premises");
  for (std::size_t i = 0; i < children.size(); ++i) {
    Constraint want = s->apply(inst->premises[i].constraint);
    if (!children[i] || !(children[i]->goal == want))
      throw std::invalid_argument(instance + " premise " + std::to_string(i) + " needs " + want.str());
  }
  auto d = std::make_shared<Derivation>();
  d->instance = inst;
  d->goal = goal;
  d->subst = *s;
  d->children = std::move(children);
  return d;
}

}  // namespace coh
