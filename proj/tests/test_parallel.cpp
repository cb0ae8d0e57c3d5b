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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "qdp/oracle.hpp"
#include "qdp/parallel.hpp"
#include "qdp/sweep.hpp"
#include "qdp/verification.hpp"

namespace {

// restores the global thread setting on scope exit
struct ThreadGuard {
  explicit ThreadGuard(int n) { qdp::par::set_threads(n); }
  ~ThreadGuard() { qdp::par::set_threads(0); }
};

}  // namespace

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(1000, 0);
  qdp::par::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("serial and parallel kernels produce bitwise-identical results") {
  const qdp::DensityMatrix rho = qdp::random_density(2, 2, 21);
  const qdp::DensityMatrix sigma = qdp::random_density(2, 2, 22);

  SUBCASE("large eigensolve") {
    const qdp::Matrix big = qdp::tensor_power(rho.matrix(), 8);
    std::vector<double> serial, parallel;
    {
      ThreadGuard guard(1);
      serial = qdp::eigvalsh(big);
    }
    {
      ThreadGuard guard(0);
      parallel = qdp::eigvalsh(big);
    }
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
      CHECK(serial[i] == parallel[i]);
  }

  SUBCASE("sweep rows") {
    const std::vector<double> grid = {0.3, 0.8, 1.7, 3.1};
    std::vector<qdp::SweepRow> serial, parallel;
    {
      ThreadGuard guard(1);
      serial = qdp::compute_sweep(rho, sigma, 0.5, 0.1, grid, 100000);
    }
    {
      ThreadGuard guard(0);
      parallel = qdp::compute_sweep(rho, sigma, 0.5, 0.1, grid, 100000);
    }
    CHECK(qdp::sweep_csv(serial) == qdp::sweep_csv(parallel));
  }

  SUBCASE("verification check") {
    qdp::verify::VerifyOptions opts;
    opts.scale = 0.02;
    qdp::verify::CheckResult serial, parallel;
    {
      ThreadGuard guard(1);
      serial = qdp::verify::run_check("fvdg-chain", opts);
    }
    {
      ThreadGuard guard(0);
      parallel = qdp::verify::run_check("fvdg-chain", opts);
    }
    CHECK(serial.passed == parallel.passed);
    CHECK(serial.worst_slack == parallel.worst_slack);
    CHECK(serial.cases == parallel.cases);
  }
}
