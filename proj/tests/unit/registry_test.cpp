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
#include "support.hpp"

namespace coh {
namespace {

using test::fromText;

const char* kBase = R"(version 1
class has_mul (M : Type) { op mul : M -> M -> M }
class has_one (M : Type) { op one : M }
class semigroup (M : Type) extends has_mul M {
  axiom mul_assoc : forall (a b c : M), mul (mul a b) c = mul a (mul b c)
}
class monoid (M : Type) extends semigroup M, has_one M {
  axiom one_mul : forall (a : M), mul one a = a
}
)";

DeclErrorKind kindOf(const std::string& extra) {
  try {
    fromText(std::string(kBase) + extra);
  } catch (const DeclarationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no DeclarationError for:\n" << extra;
  return DeclErrorKind::DuplicateClass;
}

TEST(Registry, ExtendsGeneratesProjectionInstances) {
  Registry reg = fromText(kBase);
  auto proj = reg.findInstance("monoid.to_semigroup");
  ASSERT_TRUE(proj);
  EXPECT_TRUE(proj->synthetic);
  EXPECT_EQ(proj->head.str(), "semigroup M");
  ASSERT_EQ(proj->premises.size(), 1u);
  EXPECT_EQ(proj->premises[0].constraint.str(), "monoid M");
  const Term* mul = proj->opDef("mul");
  ASSERT_TRUE(mul);
  EXPECT_EQ(*mul, Term::proj(InstanceRef::premiseAt(0), "mul"));
  EXPECT_TRUE(reg.findInstance("monoid.to_has_one"));
}

TEST(Registry, FullFieldSetIncludesInherited) {
  Registry reg = fromText(kBase);
  std::vector<std::string> names;
  for (const auto& f : reg.classInfo("monoid").fields) names.push_back(f.name);
  EXPECT_EQ(names, (std::vector<std::string>{"mul", "one"}));
  EXPECT_TRUE(reg.classInfo("semigroup").hasField("mul"));
  EXPECT_FALSE(reg.classInfo("semigroup").hasField("one"));
}

TEST(Registry, FieldSignatureInstantiatesParameters) {
  Registry reg = test::bundled();
  Constraint c{"has_scalar", {TypeExpr::app("R"), TypeExpr::app("fn", {TypeExpr::app("i"), TypeExpr::app("R")})}};
  EXPECT_EQ(reg.fieldSignature(c, "smul").signature(), "R -> fn i R -> fn i R");
}

TEST(Registry, DeclarationErrors) {
  EXPECT_EQ(kindOf("class has_mul (M : Type) { op mul : M -> M -> M }\n"), DeclErrorKind::DuplicateClass);
  EXPECT_EQ(kindOf("class group (G : Type) extends loop G { }\n"), DeclErrorKind::UnknownSuperclass);
  EXPECT_EQ(kindOf("instance i (M) : ring M { }\n"), DeclErrorKind::UnknownClass);
  EXPECT_EQ(kindOf("instance i (M) : has_mul M { }\n"), DeclErrorKind::MissingOpDef);
  EXPECT_EQ(kindOf("instance i (M) [has_mul M] : has_one M { one := mul }\ninstance i (M) [has_mul M] : has_one M { one := mul }\n"),
            DeclErrorKind::DuplicateInstance);
  EXPECT_EQ(kindOf("instance i (M) [has_one M] : has_one M { one := one, mul := one }\n"), DeclErrorKind::ExtraOpDef);
  EXPECT_EQ(kindOf("instance i (M N) [has_one N] : has_one M { one := one }\n"), DeclErrorKind::AmbiguousVariable);
  EXPECT_EQ(kindOf("class c (M : Type) [has_one N] { }\n"), DeclErrorKind::UnscopedVariable);
  EXPECT_EQ(kindOf("class c (M : Type) { op f : M -> M\n op f : M -> M }\n"), DeclErrorKind::DuplicateField);
}

TEST(Registry, ValidateReportsUnknownSymbol) {
  Registry reg = fromText(std::string(kBase) + "instance i (M) [has_mul M] : has_one M { one := unit }\n");
  auto diags = reg.validate();
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].code, DiagCode::UnknownSymbol);
  EXPECT_NE(diags[0].message.find("unit"), std::string::npos);
}

TEST(Registry, ValidateReportsArityClash) {
  Registry reg = fromText(std::string(kBase) +
                          "instance i (M) [has_mul (fn M)] : has_mul (fn M M) { mul := fun a b => a }\n");
  auto diags = reg.validate();
  ASSERT_FALSE(diags.empty());
  EXPECT_EQ(diags[0].code, DiagCode::ArityClash);
}

TEST(Registry, AmbiguousPremiseFieldNeedsQualification) {
  Registry reg = fromText(std::string(kBase) +
                          "instance i (M) [a : has_mul M] [b : has_mul M] : has_mul M { mul := mul }\n"
                          "instance j (M) [a : has_mul M] [b : has_mul M] : has_mul M { mul := b.mul }\n");
  auto diags = reg.validate();
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].code, DiagCode::AmbiguousSymbol);
  EXPECT_EQ(*reg.findInstance("j")->opDef("mul"), Term::proj(InstanceRef::premiseAt(1), "mul"));
}

TEST(Registry, BundledCorpusValidates) {
  for (const auto& d : test::bundled().validate()) ADD_FAILURE() << d.str();
  for (bool fixed : {false, true})
    for (const auto& d : test::diamondCorpus(fixed).validate()) ADD_FAILURE() << d.str();
}

TEST(Registry, AssumptionsAreTriedFirst) {
  Registry base = fromText(kBase);
  Goal g = parseGoal("[h : monoid R] semigroup R");
  Registry reg = base.withAssumptions(g.assumptions);
  ASSERT_FALSE(reg.instances().empty());
  EXPECT_TRUE(reg.instances().front()->opaque);
  EXPECT_EQ(reg.instances().front()->head.str(), "monoid R");
  EXPECT_EQ(base.instances().size() + 1, reg.instances().size());
}

TEST(Registry, PriorityOrdersSearch) {
  Registry reg = fromText(std::string(kBase) +
                          "instance late (M) [has_mul M] : has_one M { one := one }\n"
                          "instance early priority 0 (M) [has_mul M] : has_one M { one := one }\n");
  std::vector<std::string> order;
  for (const auto& i : reg.instances())
    if (i->name == "late" || i->name == "early") order.push_back(i->name);
  EXPECT_EQ(order, (std::vector<std::string>{"early", "late"}));
}

}  // namespace
}  // namespace coh
