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

#include "qdp/parallel.hpp"

#include <algorithm>
#include <atomic>

#ifdef QDP_HAVE_OPENMP
#include <omp.h>
#endif

namespace qdp::par {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int threads() { return g_threads.load(); }

bool parallel_enabled() {
#ifdef QDP_HAVE_OPENMP
  return g_threads.load() != 1;
#else
  return false;
#endif
}

void serial_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t min_parallel) {
#ifdef QDP_HAVE_OPENMP
  const int requested = g_threads.load();
  if (requested != 1 && n >= std::max<std::size_t>(min_parallel, 2)) {
    const int nthreads = requested == 0 ? omp_get_max_threads() : requested;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  serial_for(n, body);
}

}  // namespace qdp::par
