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

#ifndef QDP_BOUNDS_HPP_
#define QDP_BOUNDS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdp/divergences.hpp"

namespace qdp {

enum class BoundSide { kLower, kUpper };

// One sample-complexity bound. Raw values are kept next to their ceilings;
// comparisons against oracles always use raw lower <= n <= ceil upper.
// Bounds whose stated (p, delta) validity regime does not match the inputs
// are emitted with assumptions_met = false instead of being suppressed.
struct BoundEntry {
  std::string name;
  BoundSide side = BoundSide::kLower;
  double raw = 0.0;
  std::optional<long long> ceiling;  // absent when raw is infinite
  bool assumptions_met = true;
  bool up_to_universal_constant = false;
  std::string note;
};

struct BoundsCertificate {
  double p = 0.5;
  double delta = 0.1;
  std::optional<double> epsilon;
  bool degenerate_privacy = false;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
};

// Integer ceiling with a relative nudge so that raw values that are integers
// up to rounding do not jump to the next integer.
long long bound_ceiling(double raw);

// Single-copy Bayes error p - p E_{(1-p)/p}(rho||sigma), clamped to
// [0, min(p, 1-p)].
double bayes_error(const DensityMatrix& rho, const DensityMatrix& sigma,
                   double p);

// Fidelity-based bounds (with the Hellinger weakening of the lower bound,
// emitted only when H_{1/2} <= 1).
BoundsCertificate fidelity_sc_bounds(const DensityMatrix& rho,
                                     const DensityMatrix& sigma, double p,
                                     double delta,
                                     const QuadratureConfig& cfg = {});

// Arbitrary-prior bounds at delta = p/4 by default; a caller-supplied delta
// additionally emits the general-delta Petz upper bound.
BoundsCertificate prior_sc_bounds(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double p,
                                  std::optional<double> delta = {},
                                  const QuadratureConfig& cfg = {});

// Multiplicative constant of the Jensen-Shannon vs Hellinger comparison.
double js_hellinger_constant(double alpha, double lambda);
// The lambda at which the growth factor exp(lambda log(1/alpha)) is exactly
// sqrt(2), and the resulting constant alpha * sqrt(2).
double js_hellinger_sqrt2_lambda(double alpha);
double js_hellinger_sqrt2_constant(double alpha);  // alpha * sqrt(2)
// Ratio of the previously known constant to the improved one at that lambda.
double js_hellinger_improvement_factor();               // 32 * sqrt(2)

// Privacy-constrained bounds.
BoundsCertificate ldp_sc_bounds(const DensityMatrix& rho,
                                const DensityMatrix& sigma, double p,
                                double delta, double eps,
                                const QuadratureConfig& cfg = {});

// Prefactor-only forms of the certificate entries, shared with the sweep.
namespace formulas {
double achievability_upper_half(double eps, double e1, double delta);
double achievability_upper_general(double eps, double e1, double delta);
double interpolation_upper(double eps, double e1, double p, double delta);
double converse1_hellinger_lower(double eps, double h_half);
double converse2_chi2_lower(double eps, double e1, double delta);
double ldp_js_lower(double eps, double js, double p);
double ldp_e1_lower(double eps, double e1, double p, double delta);
}  // namespace formulas

// n*_B(p, delta_for_lower) <= n*_PF(alpha, beta) <= n*_B(p, delta_for_upper).
struct ConversionBracket {
  double p = 0.0;
  double delta_for_lower = 0.0;
  double delta_for_upper = 0.0;
  bool ranges_ok = false;
  bool equivalence_up_to_constant = false;
};
ConversionBracket pf_to_bayes(double alpha, double beta);

// n*_PF(alpha_lower, beta_lower) <= n*_B(p, delta)
//                                <= n*_PF(alpha_upper, beta_upper).
struct PfBracket {
  double alpha_lower = 0.0, beta_lower = 0.0;
  double alpha_upper = 0.0, beta_upper = 0.0;
  bool ranges_ok = false;
  bool equivalence_up_to_constant = false;
};
PfBracket bayes_to_pf(double p, double delta);

// Majority-vote repetition: the sufficient round count from the boosting
// argument plus the exact majority error at the (odd) bound.
struct MajorityBoost {
  long long r_bound = 0;
  long long r_odd = 0;
  std::map<long long, double> exact_error;
  bool bound_holds = false;
};
MajorityBoost majority_boost(double alpha, double alpha_target);

// Asymmetric LDP bounds, valid up to universal constants.
BoundsCertificate asymmetric_ldp_bounds(const DensityMatrix& rho,
                                        const DensityMatrix& sigma,
                                        double alpha, double beta, double eps);

}  // namespace qdp

#endif  // QDP_BOUNDS_HPP_
