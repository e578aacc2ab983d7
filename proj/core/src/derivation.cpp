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

#include "coh/derivation.hpp"

#include <algorithm>

#include "coh/registry.hpp"

namespace coh {

const std::string& Derivation::instanceName() const {
  static const std::string unknown = "?";
  return instance ? instance->name : unknown;
}

std::size_t Derivation::height() const {
  std::size_t h = 0;
  for (const auto& c : children) h = std::max(h, c->height());
  return h + 1;
}

std::size_t Derivation::nodeCount() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c->nodeCount();
  return n;
}

bool sameDerivation(const Derivation& a, const Derivation& b) {
  if (&a == &b) return true;
  if (a.instanceName() != b.instanceName() || !(a.goal == b.goal) ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!sameDerivation(*a.children[i], *b.children[i])) return false;
  return true;
}

}  // namespace coh
