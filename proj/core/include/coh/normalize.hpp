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

#include <cstddef>

#include "coh/term.hpp"

namespace coh {

struct NormalizeOptions {
  /// Maximum number of beta, delta and iota contractions.
  std::size_t fuel = 10000;
};

/// Beta-, delta- and iota-normal term. `steps` counts contractions used.
struct NormalForm {
  Term term;
  std::size_t steps = 0;
};

/// Leftmost-outermost reduction to full normal form.
///
/// Delta unfolds `Proj(node, f)` when the node's instance has a body for `f`;
/// projections out of assumed instances are neutral. `natrec` reduces only on
/// a literal scrutinee and is otherwise stuck. Throws FuelExhausted.
NormalForm normalize(const Term& t, const NormalizeOptions& options = {});

/// Bottom-up collapse of `fun x => f x` to `f` when x is not free in f.
Term etaCollapse(const Term& t);

/// Alpha-equivalence after eta collapse of both sides.
bool alphaEquivalent(const Term& a, const Term& b);

/// Definitional equality: normal forms are alpha-equivalent up to eta.
bool defeq(const Term& a, const Term& b, const NormalizeOptions& options = {});

}  // namespace coh
