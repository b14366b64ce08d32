// Copyright 2026 The epcodes Authors
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
#include <string>
#include <vector>

namespace epc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;  // key=value facts, or the first failure
};

struct SelftestOptions {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

// Runs every acceptance criterion; a criterion fails if any check fails or
// it exceeds its time limit.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts = {});

// One line per criterion plus a summary; timings only when requested.
std::string format_results(const std::vector<CriterionResult>& results, bool timings = true);

}  // namespace epc
