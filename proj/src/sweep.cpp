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

#include "qdp/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "qdp/oracle.hpp"
#include "qdp/parallel.hpp"

namespace qdp {

std::vector<SweepRow> compute_sweep(const DensityMatrix& rho,
                                    const DensityMatrix& sigma, double p,
                                    double delta,
                                    const std::vector<double>& eps_grid,
                                    long long witness_n_max,
                                    const QuadratureConfig& cfg) {
  if (eps_grid.empty())
    throw Error(ErrorKind::kRangeViolation, "sweep: epsilon grid is empty");
  for (std::size_t i = 1; i < eps_grid.size(); ++i)
    if (!(eps_grid[i] > eps_grid[i - 1]))
      throw Error(ErrorKind::kRangeViolation,
                  "sweep: epsilon grid must be strictly increasing");
  if (eps_grid.front() < 0.0)
    throw Error(ErrorKind::kRangeViolation, "sweep: epsilon must be >= 0");

  const double e1 = trace_distance(rho, sigma);
  const double h_half = integral_hellinger(rho, sigma, 0.5, cfg).hellinger.value;
  const double js = jensen_shannon(rho, sigma, p).value;

  std::vector<SweepRow> rows(eps_grid.size());
  par::parallel_for(eps_grid.size(), [&](std::size_t i) {
    const double eps = eps_grid[i];
    SweepRow& row = rows[i];
    row.epsilon = eps;
    row.lower_hellinger = formulas::converse1_hellinger_lower(eps, h_half);
    row.lower_chi2 = formulas::converse2_chi2_lower(eps, e1, delta);
    row.lower_js = formulas::ldp_js_lower(eps, js, p);
    row.upper_achievability = formulas::achievability_upper_half(eps, e1, delta);
    row.upper_general = formulas::achievability_upper_general(eps, e1, delta);
    if (eps > 0.0 && e1 > 0.0) {
      const OracleResult witness =
          ldp_witness(rho, sigma, p, delta, eps, witness_n_max);
      row.witness_n = witness.n_star;
    }
    const double lowers[3] = {row.lower_hellinger, row.lower_chi2, row.lower_js};
    const char* tags[3] = {"hellinger", "chi2", "js"};
    int best = -1;
    for (int k = 0; k < 3; ++k) {
      if (!std::isfinite(lowers[k])) continue;
      if (best < 0 || lowers[k] > lowers[best]) best = k;
    }
    row.best_lower_tag = best < 0 ? "degenerate" : tags[best];
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "epsilon,lower_hellinger,lower_chi2,lower_js,upper_achievability,"
      "upper_general,witness_n,best_lower_tag\n";
  char buf[64];
  const auto num = [&buf](double v) -> std::string {
    if (std::isinf(v)) return "inf";
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  };
  for (const SweepRow& r : rows) {
    out += num(r.epsilon) + ',' + num(r.lower_hellinger) + ',' +
           num(r.lower_chi2) + ',' + num(r.lower_js) + ',' +
           num(r.upper_achievability) + ',' + num(r.upper_general) + ',';
    out += r.witness_n.has_value() ? std::to_string(*r.witness_n)
                                   : std::string("inf");
    out += ',' + r.best_lower_tag + '\n';
  }
  return out;
}

}  // namespace qdp
