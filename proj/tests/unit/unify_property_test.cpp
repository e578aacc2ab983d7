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

#include <random>

#include "coh/type_expr.hpp"

namespace coh {
namespace {

const std::vector<std::string> kVars = {"X", "Y", "Z"};

class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {}

  TypeExpr next(int depth) {
    int pick = std::uniform_int_distribution<int>(0, depth > 0 ? 6 : 4)(rng_);
    switch (pick) {
      case 0: case 1: case 2: return TypeExpr::var(kVars[pick]);
      case 3: return TypeExpr::app("c");
      case 4: return TypeExpr::app("d");
      case 5: return TypeExpr::app("f", {next(depth - 1)});
      default: return TypeExpr::app("g", {next(depth - 1), next(depth - 1)});
    }
  }

 private:
  std::mt19937 rng_;
};

std::vector<TypeExpr> groundTerms() {
  std::vector<TypeExpr> base = {TypeExpr::app("c"), TypeExpr::app("d")};
  std::vector<TypeExpr> out = base;
  for (const auto& a : base) out.push_back(TypeExpr::app("f", {a}));
  for (const auto& a : base)
    for (const auto& b : base) out.push_back(TypeExpr::app("g", {a, b}));
  return out;
}

// Every ground substitution of X, Y, Z over terms of height at most 2.
std::vector<Substitution> groundSubstitutions() {
  auto terms = groundTerms();
  std::vector<Substitution> out;
  for (const auto& x : terms)
    for (const auto& y : terms)
      for (const auto& z : terms) {
        Substitution s;
        s.bind("X", x);
        s.bind("Y", y);
        s.bind("Z", z);
        out.push_back(std::move(s));
      }
  return out;
}

TEST(UnifyProperty, ThousandRandomPairsAreSound) {
  TermGen gen(20260101);
  int unified = 0;
  for (int i = 0; i < 1000; ++i) {
    TypeExpr a = gen.next(3);
    TypeExpr b = gen.next(3);
    auto s = tryUnify(a, b);
    if (!s) continue;
    ++unified;
    EXPECT_EQ(s->apply(a), s->apply(b)) << a.str() << " ~ " << b.str();
    for (const auto& [v, img] : s->bindings()) {
      EXPECT_EQ(s->apply(img), img) << "not idempotent at " << v;
      EXPECT_FALSE(img.occurs(v));
    }
  }
  // Enough successes for the check to mean something.
  EXPECT_GT(unified, 100);
}

TEST(UnifyProperty, MostGeneralAgainstBruteForce) {
  TermGen gen(424242);
  const auto grounds = groundSubstitutions();
  int withGroundUnifier = 0;
  for (int i = 0; i < 300; ++i) {
    TypeExpr a = gen.next(2);
    TypeExpr b = gen.next(2);
    auto mgu = tryUnify(a, b);
    for (const auto& sigma : grounds) {
      if (sigma.apply(a) != sigma.apply(b)) continue;
      ++withGroundUnifier;
      ASSERT_TRUE(mgu) << "missed unifier for " << a.str() << " ~ " << b.str();
      for (const auto& v : kVars) {
        TypeExpr x = TypeExpr::var(v);
        EXPECT_EQ(sigma.apply(mgu->apply(x)), sigma.apply(x)) << "not most general at " << v;
      }
    }
  }
  EXPECT_GT(withGroundUnifier, 0);
}

}  // namespace
}  // namespace coh
