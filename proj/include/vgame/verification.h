// Copyright 2026 The Voronoi Game Authors.
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

// Reproduction checks for the published values and characterisation. Shared
// by the `verify-paper` subcommand and the acceptance test binary.

#ifndef VGAME_VERIFICATION_H_
#define VGAME_VERIFICATION_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vgame/serialization.h"

namespace vgame {

struct CheckResult {
  std::string criterion;
  std::string name;
  std::string expected;
  double got = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  uint64_t seed = 20260101;
  int threads = 1;
  int64_t oracle_samples = 1'000'000;
  int equivalence_cases = 1000;
  int perturbation_cases = 100;
};

std::vector<CheckResult> CheckWinnerTable();
std::vector<CheckResult> CheckFormulaEquivalence(const VerifyOptions& options);
std::vector<CheckResult> CheckFirstPointOnTwoGrid(const VerifyOptions& options);
std::vector<CheckResult> CheckTwoByTwoRemark(const VerifyOptions& options);
std::vector<CheckResult> CheckFourStonesBound();
std::vector<CheckResult> CheckWinningInterval(const VerifyOptions& options);
std::vector<CheckResult> CheckAxisDegeneracy(const VerifyOptions& options);
std::vector<CheckResult> CheckNonGridPunishment(const VerifyOptions& options);

struct CheckGroup {
  std::string criterion;
  std::function<std::vector<CheckResult>(const VerifyOptions&)> run;
};

// Every group above, in a fixed order.
std::vector<CheckGroup> ReproductionCheckGroups();
std::vector<CheckResult> RunReproductionChecks(const VerifyOptions& options);

Json ToJson(const std::vector<CheckResult>& results);
std::string FormatTable(const std::vector<CheckResult>& results);

// Calls fn(i) for i in [0, count) on `threads` workers (0 = all cores).
void ParallelFor(int count, int threads, const std::function<void(int)>& fn);

}  // namespace vgame

#endif  // VGAME_VERIFICATION_H_
