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
#include "coh/eval.hpp"
#include "coh/resolver.hpp"
#include "support.hpp"

namespace coh {
namespace {

using test::carrier;
using test::pose;

TypeExpr atom(const std::string& n) { return TypeExpr::app(n); }

TEST(Eval, LambdaAndNatrecOverNat) {
  Registry reg;
  Evaluator ev(reg, {});
  Term dbl = Term::lam("n", Term::natRec(Term::nat(0),
                                         Term::lams({"k", "r"}, Term::var("k")), Term::var("n")));
  // natrec 0 (fun k r => k) n is the predecessor.
  EXPECT_EQ(ev.apply(ev.evalTerm(dbl), Value::nat(5)).natValue(), 4u);
  EXPECT_EQ(ev.apply(ev.evalTerm(dbl), Value::nat(0)).natValue(), 0u);
  EXPECT_THROW(ev.evalTerm(Term::var("q")), UnboundVariable);
  EXPECT_THROW(ev.apply(Value::nat(1), Value::nat(1)), EvalError);
}

TEST(Eval, RecursionLimit) {
  Registry reg;
  EXPECT_EQ(Evaluator(reg, {}, EvalOptions{8}).recursionLimit(), 64u);
  EXPECT_EQ(Evaluator(reg, {}, EvalOptions{1}).recursionLimit(), 2u);
  Evaluator ev(reg, {}, EvalOptions{3});
  Term t = Term::natRec(Term::nat(0), Term::lams({"k", "r"}, Term::var("r")), Term::nat(10));
  EXPECT_THROW(ev.evalTerm(t), ScalarOutOfRange);
  Term ok = Term::natRec(Term::nat(0), Term::lams({"k", "r"}, Term::var("r")), Term::nat(9));
  EXPECT_NO_THROW(ev.evalTerm(ok));
}

TEST(Eval, DomainsOfDerivedTypes) {
  Registry reg;
  auto z2 = carrier("zmod2");
  Evaluator ev(reg, {{"A", z2}, {"B", z2}, {"iota", makeIndexSet("fin2", 2)}});
  EXPECT_EQ(ev.enumerate(atom("A")).size(), 2u);
  EXPECT_EQ(ev.enumerate(TypeExpr::app("add_hom", {atom("A"), atom("B")})).size(), 2u);
  TypeExpr big = TypeExpr::app("fn", {atom("iota"), TypeExpr::app("add_hom", {atom("A"), atom("B")})});
  EXPECT_EQ(ev.enumerate(big).size(), 4u);
  EXPECT_EQ(ev.enumerate(atom("Nat")).size(), 9u);
  EXPECT_TRUE(ev.domain(atom("Nat")).isNat);
  EXPECT_THROW(ev.domain(atom("C")), EvalError);
  EXPECT_THROW(ev.domain(TypeExpr::app("fn", {atom("Nat"), atom("A")})), EvalError);
  EXPECT_EQ(ev.show(big, ev.enumerate(big)[3]), "[[0,1],[0,1]]");
}

TEST(Eval, ExtensionalEqualityOnFunctions) {
  Registry reg;
  auto z3 = carrier("zmod3");
  Evaluator ev(reg, {{"A", z3}});
  TypeExpr endo = TypeExpr::app("fn", {atom("A"), atom("A")});
  Value id = ev.evalTerm(Term::lam("x", Term::var("x")));
  Value id2 = ev.evalTerm(Term::lam("y", Term::app(Term::lam("z", Term::var("z")), Term::var("y"))));
  EXPECT_TRUE(ev.equalAt(endo, id, id2));
  Value k = ev.evalTerm(Term::lam("x", Term::constant(ElementRef{z3, 0})));
  EXPECT_FALSE(ev.equalAt(endo, id, k));
  EXPECT_EQ(ev.toElement(id, ev.domain(endo).carrier), *ev.domain(endo).carrier->encode({0, 1, 2}));
}

TEST(Eval, OppositeActionIsRightMultiplication) {
  auto [reg, goal] = pose(test::bundled(), "[monoid M] mul_action (opposite M) M");
  DerivationPtr d = resolve(goal, reg);
  auto nc = carrier("noncomm3");
  Evaluator ev(reg, {{"M", nc}});
  Value smul = ev.evalTerm(derivationTerm(d, "smul", reg));
  CarrierPtr op = ev.domain(TypeExpr::app("opposite", {atom("M")})).carrier;
  int distinct = 0;
  for (std::uint32_t a = 0; a < nc->size(); ++a)
    for (std::uint32_t b = 0; b < nc->size(); ++b) {
      Value got = ev.applyAll(smul, {Value::element(op, a), Value::element(nc, b)});
      EXPECT_EQ(got.index(), nc->apply("mul", {b, a}));
      if (nc->apply("mul", {b, a}) != nc->apply("mul", {a, b})) ++distinct;
    }
  // The table is genuinely noncommutative, so the order matters.
  EXPECT_GT(distinct, 0);
}

TEST(Eval, NatModuleIsRepeatedAddition) {
  auto [reg, goal] = pose(test::bundled(), "[add_comm_monoid M] module Nat M");
  DerivationPtr d = resolve(goal, reg);
  EXPECT_EQ(d->instanceName(), "add_comm_monoid.to_nat_module");
  auto z4 = carrier("zmod4");
  Evaluator ev(reg, {{"M", z4}});
  Value smul = ev.evalTerm(derivationTerm(d, "smul", reg));
  for (std::uint64_t n = 0; n <= 8; ++n)
    for (std::uint32_t x = 0; x < 4; ++x)
      EXPECT_EQ(ev.applyAll(smul, {Value::nat(n), Value::element(z4, x)}).index(), natSmul(*z4, n, x));
}

TEST(Eval, AssumedNsmulFallsBackToAddition) {
  auto [reg, goal] = pose(test::diamondCorpus(true), "module Nat B");
  DerivationPtr d = resolve(goal, reg);
  auto z3 = carrier("zmod3");
  Evaluator ev(reg, {{"B", z3}});
  Value smul = ev.evalTerm(derivationTerm(d, "smul", reg));
  EXPECT_EQ(ev.applyAll(smul, {Value::nat(4), Value::element(z3, 2)}).index(), 2u);
}

TEST(Eval, InferTypeOfProjection) {
  auto [reg, goal] = pose(test::bundled(), "[add_comm_monoid M] module Nat M");
  DerivationPtr d = resolve(goal, reg);
  Evaluator ev(reg, {});
  Term t = Term::apps(Term::proj(InstanceRef::of(d), "smul"), {Term::var("n"), Term::var("x")});
  auto ty = ev.inferType(t, {{"n", atom("Nat")}, {"x", atom("M")}});
  ASSERT_TRUE(ty);
  EXPECT_EQ(ty->str(), "M");
}

}  // namespace
}  // namespace coh
