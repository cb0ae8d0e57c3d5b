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
// Serial-reference vs OpenMP comparison for the hot kernels: batched
// divergence evaluation, the large Hermitian eigensolve behind the
// tensor-power oracle, and the epsilon sweep.

#include <benchmark/benchmark.h>

#include "qdp/divergences.hpp"
#include "qdp/oracle.hpp"
#include "qdp/parallel.hpp"
#include "qdp/sweep.hpp"

namespace {

void set_mode(benchmark::State& state) {
  qdp::par::set_threads(static_cast<int>(state.range(0)));
}

void BM_fvdg_batch(benchmark::State& state) {
  set_mode(state);
  for (auto _ : state) {
    std::vector<double> worst(64, 0.0);
    qdp::par::parallel_for(worst.size(), [&](std::size_t i) {
      const qdp::DensityMatrix rho = qdp::random_density(4, 4, 2 * i + 1);
      const qdp::DensityMatrix sigma = qdp::random_density(4, 4, 2 * i + 2);
      const double h =
          qdp::integral_hellinger(rho, sigma, 0.5).hellinger.value;
      const double e1 = qdp::trace_distance(rho, sigma);
      worst[i] = e1 - 0.5 * h;
    });
    benchmark::DoNotOptimize(worst);
  }
  qdp::par::set_threads(0);
}
BENCHMARK(BM_fvdg_batch)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_tensor_bayes_error(benchmark::State& state) {
  set_mode(state);
  const qdp::DensityMatrix rho = qdp::random_density(2, 2, 5);
  const qdp::DensityMatrix sigma = qdp::random_density(2, 2, 6);
  const unsigned copies = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdp::exact_bayes_error_n(rho, sigma, 0.5, copies));
  }
  qdp::par::set_threads(0);
}
BENCHMARK(BM_tensor_bayes_error)
    ->Args({1, 7})
    ->Args({0, 7})
    ->Args({1, 9})
    ->Args({0, 9})
    ->Unit(benchmark::kMillisecond);

void BM_sweep(benchmark::State& state) {
  set_mode(state);
  const qdp::DensityMatrix rho =
      qdp::DensityMatrix::from_probabilities({0.8, 0.2});
  const qdp::DensityMatrix sigma =
      qdp::DensityMatrix::from_probabilities({0.3, 0.7});
  std::vector<double> grid;
  for (int i = 1; i <= 24; ++i) grid.push_back(0.2 * i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qdp::compute_sweep(rho, sigma, 0.5, 0.1, grid, 100000));
  }
  qdp::par::set_threads(0);
}
BENCHMARK(BM_sweep)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
