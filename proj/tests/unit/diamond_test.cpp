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

#include "coh/diamond.hpp"
#include "support.hpp"

namespace coh {
namespace {

using test::carrier;
using test::pose;

const char* kDiamondGoal = "module Nat (fn iota (add_hom A B))";

DiamondOptions withCarriers(std::vector<Bindings> sets) {
  DiamondOptions o;
  o.carrierSets = std::move(sets);
  return o;
}

std::vector<Bindings> smallSets() {
  auto fin2 = makeIndexSet("fin2", 2);
  std::vector<Bindings> out;
  for (const char* a : {"zmod2", "zmod3"})
    for (const char* b : {"zmod2", "zmod4"}) out.push_back({{"A", carrier(a)}, {"B", carrier(b)}, {"iota", fin2}});
  return out;
}

TEST(Diamond, NaiveCorpusIsPropositionalOnly) {
  auto [reg, goal] = pose(test::diamondCorpus(false), kDiamondGoal);
  DiamondReport r = findDiamonds(goal, reg, withCarriers(smallSets()));
  ASSERT_EQ(r.derivations.size(), 3u);
  ASSERT_EQ(r.pairs.size(), 3u);
  for (const auto& p : r.pairs) {
    EXPECT_EQ(p.verdict, Verdict::PropEqOnly) << p.first << "-" << p.second;
    for (const auto& f : p.fields)
      for (const auto& e : f.evidence) {
        EXPECT_TRUE(e.error.empty()) << e.error;
        EXPECT_TRUE(e.agree);
      }
  }
  EXPECT_FALSE(r.coherent());
  EXPECT_EQ(r.pairs[1].first, 0u);
  EXPECT_EQ(r.pairs[1].second, 2u);
}

TEST(Diamond, FixedCorpusIsDefinitional) {
  auto [reg, goal] = pose(test::diamondCorpus(true), kDiamondGoal);
  DiamondReport r = findDiamonds(goal, reg, withCarriers(smallSets()));
  ASSERT_EQ(r.pairs.size(), 3u);
  for (const auto& p : r.pairs) EXPECT_EQ(p.verdict, Verdict::Defeq);
  EXPECT_TRUE(r.coherent());
}

TEST(Diamond, NoCarriersLeavesNaiveInconclusive) {
  auto [reg, goal] = pose(test::diamondCorpus(false), kDiamondGoal);
  DiamondReport r = findDiamonds(goal, reg);
  for (const auto& p : r.pairs) EXPECT_EQ(p.verdict, Verdict::Inconclusive);
  auto [freg, fgoal] = pose(test::diamondCorpus(true), kDiamondGoal);
  for (const auto& p : findDiamonds(fgoal, freg).pairs) EXPECT_EQ(p.verdict, Verdict::Defeq);
}

TEST(Diamond, FuelExhaustionIsInconclusive) {
  auto [reg, goal] = pose(test::diamondCorpus(true), kDiamondGoal);
  DiamondOptions o = withCarriers({});
  o.normalize.fuel = 1;
  DiamondReport r = findDiamonds(goal, reg, o);
  ASSERT_FALSE(r.pairs.empty());
  EXPECT_EQ(r.pairs[0].verdict, Verdict::Inconclusive);
  EXPECT_TRUE(r.pairs[0].fields[0].fuelExhausted);
}

TEST(Diamond, SingleDerivationHasNoPairs) {
  auto [reg, goal] = pose(test::bundled(), "[monoid M] mul_action (opposite M) M");
  DiamondReport r = findDiamonds(goal, reg);
  EXPECT_EQ(r.derivations.size(), 1u);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_TRUE(r.coherent());
}

TEST(Diamond, DivergentInstanceIsCaught) {
  Registry reg = test::fromText(readFile(test::sourcePath("corpus/diamond_naive.tc")) + R"(
instance double.module (M) [add_comm_monoid M] : module Nat M {
  smul := fun n x => add x x
}
)");
  auto [posed, goal] = pose(reg, "module Nat B");
  DiamondReport r = findDiamonds(goal, posed, withCarriers({{{"B", carrier("zmod3")}}}));
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].verdict, Verdict::Divergent);
  const auto& cx = r.pairs[0].fields[0].counterexample;
  ASSERT_TRUE(cx);
  // smul 0 1 is 0 by recursion and 2 by doubling.
  EXPECT_EQ(cx->values, (std::vector<std::pair<std::string, std::string>>{{"arg0", "0"}, {"arg1", "1"}}));
  EXPECT_EQ(cx->lhs, "0");
  EXPECT_EQ(cx->rhs, "2");
}

TEST(Diamond, SubsingletonAcrossCarriers) {
  auto z2 = carrier("zmod2");
  auto fin2 = makeIndexSet("fin2", 2);
  struct Case {
    const char* goal;
    Bindings bindings;
  };
  std::vector<Case> cases = {
      {"module Nat (add_hom A B)", {{"A", z2}, {"B", z2}}},
      {"module Nat (fn iota B)", {{"B", z2}, {"iota", fin2}}},
  };
  for (const char* name : {"zmod2", "zmod3", "zmod4"})
    cases.push_back({kDiamondGoal, {{"A", carrier(name)}, {"B", carrier(name)}, {"iota", fin2}}});
  for (const auto& c : cases) {
    auto [reg, goal] = pose(test::diamondCorpus(false), c.goal);
    DiamondReport r = findDiamonds(goal, reg, withCarriers({c.bindings}));
    EXPECT_GE(r.derivations.size(), 2u) << c.goal;
    for (const auto& p : r.pairs) {
      EXPECT_NE(p.verdict, Verdict::Divergent);
      EXPECT_NE(p.verdict, Verdict::Inconclusive);
      for (const auto& f : p.fields) EXPECT_FALSE(f.counterexample);
    }
  }
}

TEST(Diamond, ExplainAndDescribe) {
  EXPECT_EQ(describeBindings({{"B", carrier("zmod2")}, {"A", carrier("zmod3")}}), "A=zmod3, B=zmod2");
  EXPECT_STREQ(toString(Verdict::PropEqOnly), "propEqOnly");
  EXPECT_STREQ(toString(Verdict::Inconclusive), "inconclusive");
}

}  // namespace
}  // namespace coh
