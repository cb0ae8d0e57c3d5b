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

#ifndef QDP_SWEEP_HPP_
#define QDP_SWEEP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qdp/bounds.hpp"

namespace qdp {

struct SweepRow {
  double epsilon = 0.0;
  double lower_hellinger = 0.0;
  double lower_chi2 = 0.0;
  double lower_js = 0.0;
  double upper_achievability = 0.0;
  double upper_general = 0.0;
  std::optional<long long> witness_n;
  std::string best_lower_tag;
};

// One row per epsilon grid point; rows are computed concurrently and written
// in grid order. The grid must be nonempty and strictly increasing.
std::vector<SweepRow> compute_sweep(const DensityMatrix& rho,
                                    const DensityMatrix& sigma, double p,
                                    double delta,
                                    const std::vector<double>& eps_grid,
                                    long long witness_n_max = 1000000,
                                    const QuadratureConfig& cfg = {});

// Fixed column order:
// epsilon,lower_hellinger,lower_chi2,lower_js,upper_achievability,
// upper_general,witness_n,best_lower_tag
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace qdp

#endif  // QDP_SWEEP_HPP_
