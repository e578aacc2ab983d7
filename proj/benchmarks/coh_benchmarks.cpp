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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "coh/diamond.hpp"
#include "coh/eval.hpp"
#include "coh/normalize.hpp"
#include "coh/parser.hpp"
#include "coh/resolver.hpp"

namespace {

using namespace coh;

std::string src(const std::string& rel) { return std::string(COH_SOURCE_DIR) + "/" + rel; }

struct Posed {
  Registry reg;
  Constraint goal;
};

Posed pose(const std::vector<std::string>& files, const std::string& goalText) {
  Registry base = loadCorpus(files);
  Goal g = parseGoal(goalText);
  return {g.assumptions.empty() ? base : base.withAssumptions(g.assumptions), g.target};
}

std::vector<std::string> bundled() {
  return {src("corpus/hierarchy.tc"), src("corpus/derived.tc"), src("corpus/nat_action.tc"),
          src("corpus/opposite.tc")};
}

void BM_ParseBundledCorpus(benchmark::State& state) {
  std::vector<std::string> texts;
  for (const auto& f : bundled()) texts.push_back(readFile(f));
  for (auto _ : state)
    for (const auto& t : texts) benchmark::DoNotOptimize(parseFile(t));
}
BENCHMARK(BM_ParseBundledCorpus);

void BM_ResolveAllDiamond(benchmark::State& state) {
  auto [reg, goal] = pose({src("corpus/diamond_naive.tc")}, "module Nat (fn iota (add_hom A B))");
  for (auto _ : state) benchmark::DoNotOptimize(resolveAll(goal, reg, ResolveOptions{static_cast<std::size_t>(state.range(0))}));
}
BENCHMARK(BM_ResolveAllDiamond)->Arg(4)->Arg(6)->Arg(8);

// Nested function types: has_scalar R (fn i1 (fn i2 ... R)).
void BM_ResolveNestedFunctions(benchmark::State& state) {
  std::string type = "R";
  for (int i = 0; i < state.range(0); ++i) type = "(fn i" + std::to_string(i) + " " + type + ")";
  auto [reg, goal] = pose(bundled(), "[has_mul R] has_scalar R " + type);
  for (auto _ : state) benchmark::DoNotOptimize(resolve(goal, reg, ResolveOptions{16}));
}
BENCHMARK(BM_ResolveNestedFunctions)->DenseRange(1, 6);

void BM_FindDiamonds(benchmark::State& state) {
  const bool fixed = state.range(0) != 0;
  auto [reg, goal] = pose({src(fixed ? "corpus/diamond_fixed.tc" : "corpus/diamond_naive.tc")},
                          "module Nat (fn iota (add_hom A B))");
  auto z4 = loadCarrier(src("carriers/zmod4.car"));
  DiamondOptions opts;
  opts.carrierSets = {{{"A", z4}, {"B", z4}, {"iota", makeIndexSet("fin2", 2)}}};
  for (auto _ : state) benchmark::DoNotOptimize(findDiamonds(goal, reg, opts));
}
BENCHMARK(BM_FindDiamonds)->Arg(0)->Arg(1);

void BM_NormalizeDiamondField(benchmark::State& state) {
  auto [reg, goal] = pose({src("corpus/diamond_fixed.tc")}, "module Nat (fn iota (add_hom A B))");
  Term t = derivationTerm(resolveAll(goal, reg).derivations.at(0), "smul", reg);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(t));
}
BENCHMARK(BM_NormalizeDiamondField);

void BM_CheckNatModuleAxioms(benchmark::State& state) {
  auto [reg, goal] = pose(bundled(), "[add_comm_monoid M] module Nat M");
  DerivationPtr d = resolve(goal, reg);
  auto z4 = loadCarrier(src("carriers/zmod4.car"));
  EvalOptions eo;
  eo.scalarRange = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(checkAxioms(d, {{"M", z4}}, reg, eo));
}
BENCHMARK(BM_CheckNatModuleAxioms)->Arg(4)->Arg(8)->Arg(16);

void BM_FunctionCarrier(benchmark::State& state) {
  auto z2 = loadCarrier(src("carriers/zmod2.car"));
  auto index = makeIndexSet("fin", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buildFunctionCarrier(index, z2));
}
BENCHMARK(BM_FunctionCarrier)->DenseRange(2, 8, 2);

void BM_Unify(benchmark::State& state) {
  std::mt19937 rng(1);
  std::function<TypeExpr(int)> gen = [&](int depth) -> TypeExpr {
    int k = std::uniform_int_distribution<int>(0, depth > 0 ? 4 : 2)(rng);
    if (k == 0) return TypeExpr::var("X" + std::to_string(rng() % 4));
    if (k == 1) return TypeExpr::app("c");
    if (k == 2) return TypeExpr::var("Y");
    return TypeExpr::app("g", {gen(depth - 1), gen(depth - 1)});
  };
  std::vector<std::pair<TypeExpr, TypeExpr>> pairs;
  for (int i = 0; i < 256; ++i) pairs.emplace_back(gen(4), gen(4));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(tryUnify(a, b));
  }
}
BENCHMARK(BM_Unify);

}  // namespace

BENCHMARK_MAIN();
