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

#ifndef QDP_PARALLEL_HPP_
#define QDP_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace qdp::par {

// 0 = use all hardware threads, 1 = serial reference path, n = n threads.
// Loop bodies must write to disjoint slots so serial and parallel runs are
// bitwise identical; tests compare the two paths.
void set_threads(int n);
int threads();
bool parallel_enabled();

// Runs serially when n < min_parallel; OpenMP dispatch overhead swamps the
// body on small batches.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t min_parallel = 2);

// Serial loop regardless of the global setting; the reference path.
void serial_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qdp::par

#endif  // QDP_PARALLEL_HPP_
