//
// Copyright 2026 The qdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef QDP_VERIFICATION_HPP_
#define QDP_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace qdp::verify {

struct VerifyOptions {
  std::uint64_t seed = 20260809;
  // Multiplies the trial counts; 1.0 runs the full suite sizes.
  double scale = 1.0;
  // Name of a check whose compared quantity gets biased, so the harness can
  // prove to itself that it detects violations.
  std::string inject_failure;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  // Most negative margin observed across all comparisons (>= 0 means every
  // inequality held with room to spare).
  double worst_slack = 0.0;
  std::string detail;
};

// All property checks, in a fixed order. The first ten are the acceptance
// criteria; the rest cover the per-module invariants.
std::vector<std::string> check_names();
CheckResult run_check(const std::string& name, const VerifyOptions& opts);
std::vector<CheckResult> run_all(const VerifyOptions& opts);

// Indices (into check_names) of the acceptance criteria, in order 1..10.
std::vector<std::string> acceptance_names();

}  // namespace qdp::verify

#endif  // QDP_VERIFICATION_HPP_
