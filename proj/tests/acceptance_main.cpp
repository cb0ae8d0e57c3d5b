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
// Acceptance suite: runs the ten gate criteria at full size and prints one
// pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include "qdp/verification.hpp"

int main(int argc, char** argv) {
  qdp::verify::VerifyOptions opts;
  if (argc > 1) opts.seed = std::stoull(argv[1]);

  const std::vector<std::string> names = qdp::verify::acceptance_names();
  bool all_passed = true;
  int index = 0;
  for (const std::string& name : names) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    const qdp::verify::CheckResult result = qdp::verify::run_check(name, opts);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    all_passed = all_passed && result.passed;
    std::printf("criterion %2d %-26s %s  cases=%lld  worst_slack=%.3g  %.1fs%s%s\n",
                index, name.c_str(), result.passed ? "PASS" : "FAIL",
                result.cases, result.worst_slack, seconds,
                result.detail.empty() ? "" : "  ", result.detail.c_str());
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
