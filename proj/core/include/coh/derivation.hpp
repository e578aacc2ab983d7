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

#include <memory>
#include <string>
#include <vector>

#include "coh/term.hpp"
#include "coh/type_expr.hpp"

namespace coh {

struct InstanceDecl;
using InstanceDeclPtr = std::shared_ptr<const InstanceDecl>;

/// Closed tree of instance applications proving `goal`. One child per
/// premise of the instance, in premise order.
struct Derivation {
  InstanceDeclPtr instance;
  Constraint goal;
  Substitution subst;
  std::vector<DerivationPtr> children;

  const std::string& instanceName() const;
  std::size_t height() const;
  std::size_t nodeCount() const;
};

/// Structural identity: same instance at every node with the same goals.
bool sameDerivation(const Derivation& a, const Derivation& b);

}  // namespace coh
