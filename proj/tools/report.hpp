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
#include <string>
#include <vector>

#include "coh/diamond.hpp"
#include "coh/eval.hpp"

namespace coh::cli {

struct FieldComparison {
  std::string field;
  bool defeq = false;
  std::string lhs;  // normal form
  std::string rhs;
};

std::string errorJson(const std::string& command, const std::string& message);

std::string resolveJson(const Constraint& goal, const DerivationPtr& d);
std::string resolveFailureJson(const Constraint& goal, const std::string& status, const std::string& message);

std::string diamondText(const DiamondReport& report);
std::string diamondJson(const DiamondReport& report);

std::string axiomsText(const Constraint& goal, const DerivationPtr& d, const Bindings& bindings,
                       const std::vector<AxiomReport>& reports);
std::string axiomsJson(const Constraint& goal, const DerivationPtr& d, const Bindings& bindings,
                       const std::vector<AxiomReport>& reports);

std::string defeqText(const Constraint& goal, std::size_t first, std::size_t second,
                      const std::vector<FieldComparison>& fields, bool same);
std::string defeqJson(const Constraint& goal, std::size_t first, std::size_t second,
                      const std::vector<FieldComparison>& fields, bool same);

}  // namespace coh::cli
