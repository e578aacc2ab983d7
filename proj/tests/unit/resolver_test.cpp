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

#include <gtest/gtest.h>

#include "coh/error.hpp"
#include "coh/diamond.hpp"
#include "coh/resolver.hpp"
#include "support.hpp"

namespace coh {
namespace {

using test::pose;

// Instance names along the leftmost spine, root first.
std::vector<std::string> spine(const DerivationPtr& d) {
  std::vector<std::string> out;
  for (DerivationPtr cur = d; cur; cur = cur->children.empty() ? nullptr : cur->children.front())
    out.push_back(cur->instanceName());
  return out;
}

const char* kDiamondGoal = "module Nat (fn iota (add_hom A B))";

TEST(Resolver, DiamondHasThreePathsInOrder) {
  for (bool fixed : {false, true}) {
    auto [reg, goal] = pose(test::diamondCorpus(fixed), kDiamondGoal);
    Resolution r = resolveAll(goal, reg, ResolveOptions{6});
    ASSERT_EQ(r.derivations.size(), 3u);
    EXPECT_FALSE(r.truncated);
    using V = std::vector<std::string>;
    EXPECT_EQ(spine(r.derivations[0]),
              (V{"pi.module", "add_hom.module", "add_comm_monoid.to_nat_module", "addB"}));
    EXPECT_EQ(spine(r.derivations[1]),
              (V{"pi.module", "add_comm_monoid.to_nat_module", "add_hom.add_comm_monoid", "addB"}));
    EXPECT_EQ(spine(r.derivations[2]),
              (V{"add_comm_monoid.to_nat_module", "pi.add_comm_monoid", "add_hom.add_comm_monoid", "addB"}));
    for (const auto& d : r.derivations) {
      EXPECT_EQ(d->height(), 4u);
      EXPECT_EQ(d->nodeCount(), 4u);
    }
  }
}

TEST(Resolver, RecursiveFunctionInstance) {
  auto [reg, goal] = pose(test::bundled(), "[has_mul R] has_scalar R (fn i1 (fn i2 R))");
  DerivationPtr d = resolve(goal, reg);
  EXPECT_EQ(spine(d), (std::vector<std::string>{"function.has_scalar'", "function.has_scalar'",
                                                "has_mul.to_has_scalar", "[has_mul R]"}));
  EXPECT_EQ(d->children[0]->goal.str(), "has_scalar R (fn i2 R)");
  EXPECT_EQ(d->children[0]->children[0]->goal.str(), "has_scalar R R");
  EXPECT_EQ(explainPath(d),
            "function.has_scalar' : has_scalar R (fn i1 (fn i2 R))\n"
            "  function.has_scalar' : has_scalar R (fn i2 R)\n"
            "    has_mul.to_has_scalar : has_scalar R R\n"
            "      [has_mul R] : has_mul R\n");
}

TEST(Resolver, OppositeAction) {
  auto [reg, goal] = pose(test::bundled(), "[monoid M] mul_action (opposite M) M");
  EXPECT_EQ(resolve(goal, reg)->instanceName(), "monoid.to_opposite_mul_action");
}

TEST(Resolver, NoInstanceVersusDepthExceeded) {
  Registry empty;
  EXPECT_THROW(resolve(parseGoal("has_scalar X Y").target, empty), NoInstance);
  auto [reg, goal] = pose(test::bundled(), "[has_mul R] has_scalar R (fn i1 (fn i2 R))");
  EXPECT_THROW(resolve(goal, reg, ResolveOptions{2}), DepthExceeded);
  // At height 3 the second step falls through to the plain function instance.
  DerivationPtr shallow = resolve(goal, reg, ResolveOptions{3});
  EXPECT_EQ(shallow->children[0]->instanceName(), "function.has_scalar");
  EXPECT_EQ(shallow->height(), 3u);
}

TEST(Resolver, TruncationFlag) {
  auto [reg, goal] = pose(test::diamondCorpus(false), kDiamondGoal);
  Resolution shallow = resolveAll(goal, reg, ResolveOptions{3});
  EXPECT_TRUE(shallow.truncated);
  EXPECT_TRUE(shallow.derivations.empty());
}

TEST(Resolver, CyclicInstancesTerminate) {
  Registry reg = test::fromText(R"(version 1
class p (T : Type) { }
class q (T : Type) { }
instance pq (T) [q T] : p T { }
instance qp (T) [p T] : q T { }
)");
  Resolution r = resolveAll(parseGoal("p X").target, reg, ResolveOptions{50});
  EXPECT_TRUE(r.derivations.empty());
  EXPECT_FALSE(r.truncated);
}

TEST(Resolver, VisitorCanStopEarly) {
  auto [reg, goal] = pose(test::diamondCorpus(false), kDiamondGoal);
  int seen = 0;
  searchDerivations(goal, reg, ResolveOptions{}, [&](const DerivationPtr&) { return ++seen < 2; });
  EXPECT_EQ(seen, 2);
}

TEST(Resolver, DerivationTermWiresPremises) {
  auto [reg, goal] = pose(test::diamondCorpus(false), kDiamondGoal);
  auto all = resolveAll(goal, reg);
  Term t = derivationTerm(all.derivations[2], "smul", reg);
  EXPECT_EQ(render(t), "fun n x => natrec pi.add_comm_monoid.zero (fun k r => pi.add_comm_monoid.add r x) n");
  EXPECT_THROW(derivationTerm(all.derivations[0], "mul", reg), std::invalid_argument);
  // Assumed instances project out of their own node.
  Term z = derivationTerm(all.derivations[0]->children[0]->children[0]->children[0], "zero", reg);
  ASSERT_TRUE(z.is(Term::Kind::Proj));
  EXPECT_EQ(z.inst().kind, InstanceRef::Kind::Node);
}

TEST(Resolver, ApplyInstanceChecksShape) {
  Registry reg = test::bundled();
  Goal g = parseGoal("[h : has_mul R] has_scalar R R");
  Registry posed = reg.withAssumptions(g.assumptions);
  DerivationPtr hyp = resolve(parseGoal("has_mul R").target, posed);
  DerivationPtr d = applyInstance(posed, "has_mul.to_has_scalar", g.target, {hyp});
  EXPECT_TRUE(sameDerivation(*d, *resolve(g.target, posed)));
  EXPECT_THROW(applyInstance(posed, "has_mul.to_has_scalar", g.target, {}), std::invalid_argument);
  EXPECT_THROW(applyInstance(posed, "has_mul.to_has_scalar", parseGoal("has_scalar R S").target, {hyp}),
               std::invalid_argument);
  EXPECT_THROW(applyInstance(posed, "nope", g.target, {}), std::invalid_argument);
}

}  // namespace
}  // namespace coh
