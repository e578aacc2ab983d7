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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace coh::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kError = 2 };

struct RunConfig {
  std::vector<std::string> corpus;
  /// `name=path` or `name=fin:N`.
  std::vector<std::string> carriers;
  std::size_t depth = 8;
  std::size_t fuel = 10000;
  std::uint64_t scalarRange = 8;
  bool json = false;
};

int cmdResolve(const std::string& goal, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmdDiamonds(const std::string& goal, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmdCheckAxioms(const std::string& goal, const std::string& instance, const RunConfig& config,
                   std::ostream& out, std::ostream& err);
int cmdDefeq(const std::string& goal, std::size_t first, std::size_t second, const RunConfig& config,
             std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coh::cli
