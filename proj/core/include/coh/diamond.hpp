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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coh/eval.hpp"
#include "coh/normalize.hpp"
#include "coh/resolver.hpp"

namespace coh {

enum class Verdict { Defeq, PropEqOnly, Divergent, Inconclusive };

const char* toString(Verdict v);

/// Extensional comparison of one field on one set of carrier bindings.
struct CarrierEvidence {
  std::string bindings;        // `A=zmod2, B=zmod2, iota=fin2`
  std::uint64_t assignments = 0;
  bool agree = true;
  /// Set when this binding could not be evaluated; the entry is then ignored.
  std::string error;
};

struct FieldVerdict {
  std::string field;
  Verdict verdict = Verdict::Defeq;
  /// Normalization ran out of fuel before the terms could be compared.
  bool fuelExhausted = false;
  std::vector<CarrierEvidence> evidence;
  /// First distinguishing argument tuple, for Divergent.
  std::optional<Assignment> counterexample;
};

struct PairVerdict {
  std::size_t first = 0;
  std::size_t second = 0;
  Verdict verdict = Verdict::Defeq;
  std::vector<FieldVerdict> fields;
};

struct DiamondOptions {
  ResolveOptions search;
  NormalizeOptions normalize;
  EvalOptions eval;
  /// Each entry binds every atom of the goal; used for extensional checks.
  std::vector<Bindings> carrierSets;
};

struct DiamondReport {
  Constraint goal;
  std::vector<DerivationPtr> derivations;
  /// The depth bound cut the search, so derivations may be missing.
  bool truncated = false;
  /// One entry per unordered pair, in (i, j) lexicographic order.
  std::vector<PairVerdict> pairs;

  /// True when every pair is definitionally equal.
  bool coherent() const;
};

/// Resolves every derivation of `goal` and classifies each pair. Throws
/// KernelInconsistency when a definitional-equality verdict is contradicted
/// by evaluation.
DiamondReport findDiamonds(const Constraint& goal, const Registry& reg,
                           const DiamondOptions& options = {});

/// Compares two derivations of the same goal field by field.
PairVerdict compareDerivations(const DerivationPtr& a, const DerivationPtr& b, const Registry& reg,
                               const DiamondOptions& options);

/// Indented tree, one `instance : goal` line per node.
std::string explainPath(const DerivationPtr& d);

/// `name=carrier` pairs in name order.
std::string describeBindings(const Bindings& b);

}  // namespace coh
