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
#include <functional>
#include <vector>

#include "coh/derivation.hpp"
#include "coh/registry.hpp"

namespace coh {

struct ResolveOptions {
  /// Maximum derivation height, counted in nodes.
  std::size_t depth = 8;
};

/// Every derivation found within the bound. `truncated` is set when some
/// branch was cut by the bound, so the list may be incomplete.
struct Resolution {
  std::vector<DerivationPtr> derivations;
  bool truncated = false;
};

/// Called for each derivation in search order. Return false to stop.
using DerivationVisitor = std::function<bool(const DerivationPtr&)>;

/// Depth-first backward chaining over instances in priority order. Goals
/// already on the current path are pruned. Returns true when the bound cut
/// at least one branch.
bool searchDerivations(const Constraint& goal, const Registry& reg, const ResolveOptions& options,
                       const DerivationVisitor& visit);

/// First derivation in search order. Throws NoInstance, or DepthExceeded
/// when nothing was found and the bound cut some branch.
DerivationPtr resolve(const Constraint& goal, const Registry& reg, const ResolveOptions& options = {});

Resolution resolveAll(const Constraint& goal, const Registry& reg, const ResolveOptions& options = {});

/// Body of `field` in the root instance with premises wired to the children,
/// or a projection out of the node when the instance is assumed. Throws
/// std::invalid_argument when the goal class has no such operation.
Term derivationTerm(const DerivationPtr& d, const std::string& field, const Registry& reg);

/// Builds one node by hand. Throws std::invalid_argument when the head does
/// not match `goal` or a child proves the wrong premise.
DerivationPtr applyInstance(const Registry& reg, const std::string& instance, const Constraint& goal,
                            std::vector<DerivationPtr> children = {});

}  // namespace coh
