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

Diagnostic firstDiag(const std::string& text) {
  try {
    parseFile(text, "t.tc");
  } catch (const ParseError& e) {
    return e.diagnostics().front();
  }
  ADD_FAILURE() << "parsed:\n" << text;
  return {};
}

Diagnostic carrierDiag(const std::string& text) {
  try {
    parseCarrier(text, "t.car");
  } catch (const ParseError& e) {
    return e.diagnostics().front();
  }
  ADD_FAILURE() << "parsed:\n" << text;
  return {};
}

TEST(Parser, EmptyFileHasNoDeclarations) { EXPECT_TRUE(parseFile("", "e.tc").empty()); }

TEST(Parser, ClassWithFieldsAndAxioms) {
  auto decls = parseFile(R"(version 1
class has_scalar (M A : Type) { op smul : M -> A -> A }
class act (M A : Type) [h : has_mul M] extends has_scalar M A {
  axiom mul_smul : forall (x y : M) (a : A), smul (h.mul x y) a = smul x (smul y a)
}
)");
  ASSERT_EQ(decls.size(), 2u);
  const auto& act = std::get<ClassDecl>(decls[1]);
  EXPECT_EQ(act.params, (std::vector<std::string>{"M", "A"}));
  ASSERT_EQ(act.premises.size(), 1u);
  EXPECT_EQ(act.premises[0].name, "h");
  EXPECT_EQ(act.extendsList[0].str(), "has_scalar M A");
  ASSERT_EQ(act.axiomFields.size(), 1u);
  EXPECT_EQ(act.axiomFields[0].bound.size(), 3u);
  EXPECT_EQ(act.axiomFields[0].bound[2].type.str(), "A");
}

TEST(Parser, InstanceAndRequires) {
  auto decls = parseFile(R"(version 1
requires nat.cs : comm_semiring Nat
instance f.smul priority 5 (I M A) [has_scalar M A] : has_scalar M (fn I A) {
  smul := fun m v i => smul m (v i)
}
)");
  ASSERT_EQ(decls.size(), 2u);
  const auto& req = std::get<InstanceDecl>(decls[0]);
  EXPECT_TRUE(req.opaque);
  EXPECT_EQ(req.head.str(), "comm_semiring Nat");
  const auto& inst = std::get<InstanceDecl>(decls[1]);
  EXPECT_EQ(inst.priority, 5);
  EXPECT_EQ(inst.head.str(), "has_scalar M (fn I A)");
  EXPECT_TRUE(inst.head.args[1].args()[0].isVar());
  ASSERT_TRUE(inst.opDef("smul"));
}

TEST(Parser, GoalWithHypotheses) {
  Goal g = parseGoal("[h : monoid M] [has_mul R] mul_action (opposite M) M");
  ASSERT_EQ(g.assumptions.size(), 2u);
  EXPECT_EQ(g.assumptions[0].name, "h");
  EXPECT_EQ(g.assumptions[1].constraint.str(), "has_mul R");
  EXPECT_EQ(g.target.str(), "mul_action (opposite M) M");
  EXPECT_TRUE(g.target.isGround());
}

TEST(Parser, SyntaxErrorsCarrySpans) {
  Diagnostic d = firstDiag("version 1\nclass c (M : Type) {\n  op f M -> M\n}\n");
  EXPECT_EQ(d.code, DiagCode::Syntax);
  EXPECT_EQ(d.span.file, "t.tc");
  EXPECT_EQ(d.span.line, 3u);
  EXPECT_EQ(d.span.column, 8u);

  EXPECT_EQ(firstDiag("class c (M : Type) { }\n").span.line, 1u);
  EXPECT_EQ(firstDiag("version 2\n").code, DiagCode::Syntax);
  Diagnostic bad = firstDiag("version 1\ninstance i (M) : c M { f := fun x => $ }\n");
  EXPECT_EQ(bad.span.line, 2u);
  EXPECT_EQ(bad.span.column, 38u);
}

TEST(Parser, RoundTripsBundledCorpus) {
  for (const auto& path : test::bundledCorpus()) {
    auto once = parseFile(readFile(path), path);
    std::string printed = printDeclarations(once);
    auto twice = parseFile(printed, "printed");
    EXPECT_EQ(printDeclarations(twice), printed) << path;
    EXPECT_EQ(once.size(), twice.size()) << path;
  }
}

TEST(Parser, RoundTripPreservesSemantics) {
  auto once = parseFile(readFile(test::sourcePath("corpus/diamond_fixed.tc")));
  Registry a;
  loadInto(a, once);
  Registry b;
  loadInto(b, parseFile(printDeclarations(once)));
  ASSERT_EQ(a.instances().size(), b.instances().size());
  for (std::size_t i = 0; i < a.instances().size(); ++i) {
    const auto& x = *a.instances()[i];
    const auto& y = *b.instances()[i];
    EXPECT_EQ(x.name, y.name);
    EXPECT_EQ(x.head, y.head);
    ASSERT_EQ(x.opDefs.size(), y.opDefs.size());
    for (std::size_t k = 0; k < x.opDefs.size(); ++k) EXPECT_EQ(x.opDefs[k].second, y.opDefs[k].second);
  }
}

TEST(Carrier, ParsesTables) {
  CarrierPtr c = parseCarrier("version 1\ncarrier two\nelems a b\nop mul 2\na b\nb a\nop one 0\na\n");
  EXPECT_EQ(c->name(), "two");
  EXPECT_EQ(c->size(), 2u);
  EXPECT_EQ(c->apply("mul", {1, 1}), 0u);
  EXPECT_EQ(c->apply("one", {}), 0u);
}

TEST(Carrier, Errors) {
  EXPECT_EQ(carrierDiag("version 1\ncarrier c\nelems a b\nop mul 2\na b\n").code, DiagCode::PartialTable);
  EXPECT_EQ(carrierDiag("version 1\ncarrier c\nelems a b\nop mul 2\na b\nb\n").code, DiagCode::PartialTable);
  Diagnostic u = carrierDiag("version 1\ncarrier c\nelems a b\nop mul 2\na b\nb z\n");
  EXPECT_EQ(u.code, DiagCode::UnknownElement);
  EXPECT_EQ(u.span.line, 6u);
  EXPECT_EQ(u.span.column, 3u);
  Diagnostic s = carrierDiag("version 1\ncarrier c\nelems a b\ndeclares monoid\nop mul 2\na a\nb b\nop one 0\na\n");
  EXPECT_EQ(s.code, DiagCode::InvalidStructure);
  EXPECT_EQ(s.span.line, 4u);
  EXPECT_EQ(carrierDiag("carrier c\n").code, DiagCode::Syntax);
}

TEST(Carrier, BundledTablesValidate) {
  for (const char* name : {"zmod2", "zmod3", "zmod4", "noncomm2", "noncomm3"}) {
    CarrierPtr c = test::carrier(name);
    EXPECT_FALSE(c->validateDeclared()) << name;
  }
}

}  // namespace
}  // namespace coh
