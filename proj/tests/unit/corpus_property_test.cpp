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
#include "coh/normalize.hpp"
#include "coh/resolver.hpp"
#include "support.hpp"

namespace coh {
namespace {

using test::carrier;

struct Sample {
  Registry reg;
  DerivationPtr derivation;
  std::string field;
  Term term;
};

// Every field of every derivation of a spread of goals over the corpora.
std::vector<Sample> corpusTerms() {
  std::vector<std::pair<Registry, std::vector<const char*>>> worlds;
  worlds.push_back({test::bundled(),
                    {"[monoid M] mul_action M M", "[monoid M] mul_action (opposite M) M",
                     "[semiring A] module A A", "[semiring A] module Nat A", "[add_comm_monoid M] module Nat M",
                     "[has_mul R] has_scalar R (fn i1 (fn i2 R))", "[comm_semiring R] algebra R R"}});
  worlds.push_back({test::diamondCorpus(false), {"module Nat (fn iota (add_hom A B))", "module Nat B"}});
  worlds.push_back({test::diamondCorpus(true), {"module Nat (fn iota (add_hom A B))", "module Nat B"}});
  std::vector<Sample> out;
  for (const auto& [base, goals] : worlds)
    for (const char* text : goals) {
      Goal g = parseGoal(text);
      if (!base.findClass(g.target.className)) continue;
      Registry reg = g.assumptions.empty() ? base : base.withAssumptions(g.assumptions);
      for (const auto& d : resolveAll(g.target, reg).derivations)
        for (const auto& f : reg.classInfo(g.target.className).fields)
          out.push_back({reg, d, f.name, derivationTerm(d, f.name, reg)});
    }
  return out;
}

TEST(CorpusProperty, NormalizationIsIdempotent) {
  auto samples = corpusTerms();
  ASSERT_GT(samples.size(), 15u);
  for (const auto& s : samples) {
    NormalForm once = normalize(s.term);
    NormalForm twice = normalize(once.term);
    EXPECT_EQ(twice.term, once.term) << s.derivation->instanceName() << "." << s.field;
    EXPECT_EQ(twice.steps, 0u);
  }
}

TEST(CorpusProperty, NormalizationPreservesMeaningOverZmod4) {
  auto z4 = carrier("zmod4");
  Bindings b = {{"M", z4}, {"A", z4}, {"B", z4}, {"R", z4},
                {"iota", makeIndexSet("fin2", 2)}, {"i1", makeIndexSet("fin2", 2)}, {"i2", makeIndexSet("fin1", 1)}};
  std::size_t compared = 0;
  for (const auto& s : corpusTerms()) {
    Evaluator ev(s.reg, b);
    const OpField sig = s.reg.fieldSignature(s.derivation->goal, s.field);
    Value raw = ev.evalTerm(s.term);
    Value nf = ev.evalTerm(normalize(s.term).term);
    std::vector<std::vector<Value>> doms;
    for (const auto& t : sig.args) doms.push_back(ev.enumerate(t));
    std::vector<std::size_t> pos(doms.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<Value> args;
      for (std::size_t i = 0; i < doms.size(); ++i) args.push_back(doms[i][pos[i]]);
      EXPECT_TRUE(ev.equalAt(sig.result, ev.applyAll(raw, args), ev.applyAll(nf, args)))
          << s.derivation->instanceName() << "." << s.field;
      ++compared;
      done = true;
      for (std::size_t i = doms.size(); i-- > 0;) {
        if (++pos[i] < doms[i].size()) {
          done = false;
          break;
        }
        pos[i] = 0;
      }
    }
  }
  EXPECT_GT(compared, 1000u);
}

TEST(CorpusProperty, InstanceBodiesNormalizeIdempotently) {
  for (const auto& reg : {test::bundled(), test::diamondCorpus(false), test::diamondCorpus(true)})
    for (const auto& inst : reg.instances())
      for (const auto& [field, body] : inst->opDefs) {
        Term once = normalize(body).term;
        EXPECT_EQ(normalize(once).term, once) << inst->name << "." << field;
      }
}

}  // namespace
}  // namespace coh
