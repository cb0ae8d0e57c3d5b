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

#ifndef QDP_QUADRATURE_HPP_
#define QDP_QUADRATURE_HPP_

#include <functional>
#include <vector>

namespace qdp {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

// Adaptive integration on [a, b] with an embedded 7/15-point Gauss-Legendre
// pair; the interval with the largest error estimate is bisected until the
// combined estimate meets the tolerances or max_subdivisions is reached.
// Known kinks of f inside (a, b) can be passed as breakpoints so every panel
// starts piecewise-smooth; the pair's error estimate is unreliable across a
// kink it cannot see.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg,
                           const std::vector<double>& breakpoints = {});

}  // namespace qdp

#endif  // QDP_QUADRATURE_HPP_
