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

#pragma once

#include <string>
#include <vector>

#include "coh/carrier.hpp"
#include "coh/parser.hpp"
#include "coh/registry.hpp"

namespace coh::test {

inline std::string sourcePath(const std::string& rel) { return std::string(COH_SOURCE_DIR) + "/" + rel; }

inline CarrierPtr carrier(const std::string& name) { return loadCarrier(sourcePath("carriers/" + name + ".car")); }

/// hierarchy, derived, nat_action and opposite, in that order.
inline std::vector<std::string> bundledCorpus() {
  return {sourcePath("corpus/hierarchy.tc"), sourcePath("corpus/derived.tc"),
          sourcePath("corpus/nat_action.tc"), sourcePath("corpus/opposite.tc")};
}

inline Registry bundled() { return loadCorpus(bundledCorpus()); }

inline Registry diamondCorpus(bool fixed) {
  return loadCorpus({sourcePath(fixed ? "corpus/diamond_fixed.tc" : "corpus/diamond_naive.tc")});
}

inline Registry fromText(const std::string& text) {
  Registry reg;
  loadInto(reg, parseFile(text, "<test>"));
  return reg;
}

/// Goal with its hypotheses folded into `reg`.
struct Posed {
  Registry reg;
  Constraint goal;
};

inline Posed pose(const Registry& base, const std::string& goalText) {
  Goal g = parseGoal(goalText);
  return {g.assumptions.empty() ? base : base.withAssumptions(g.assumptions), g.target};
}

}  // namespace coh::test
