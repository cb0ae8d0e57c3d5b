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

#ifndef QDP_LDP_HPP_
#define QDP_LDP_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdp/divergences.hpp"
#include "qdp/states.hpp"

namespace qdp {

// Eigenvalues of rho - sigma inside [-tie, tie] are assigned to the
// "rho >= sigma" projector; this matches the >= convention and changes the
// mechanism outputs on degenerate inputs.
inline constexpr double kMechanismTieTol = 1e-12;

enum class ChannelKind { kKraus, kMeasurement };

class Channel {
 public:
  Channel() = default;  // empty; use the factories for a valid channel
  static Channel kraus(std::vector<Matrix> ops);
  static Channel measurement(std::vector<Matrix> povm);

  ChannelKind kind() const { return kind_; }
  const std::vector<Matrix>& ops() const { return ops_; }
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }

  DensityMatrix apply_state(const DensityMatrix& rho) const;      // kraus
  std::vector<double> apply_measurement(const DensityMatrix& rho) const;

 private:
  ChannelKind kind_ = ChannelKind::kKraus;
  std::vector<Matrix> ops_;
  std::size_t in_dim_ = 0;
  std::size_t out_dim_ = 0;
};

// Either a post-channel state or an outcome distribution.
struct ChannelOutput {
  std::optional<DensityMatrix> state;
  std::optional<std::vector<double>> distribution;
};
ChannelOutput apply_channel(const Channel& ch, const DensityMatrix& rho);

enum class LdpMethod { kExactPovm, kSampledPure };

struct LdpReport {
  double epsilon_tested = 0.0;
  double margin = 0.0;
  LdpMethod method = LdpMethod::kExactPovm;
  long samples = 0;
  bool passes(double tol = 1e-9) const { return margin >= -tol; }
};

// Measurement channels get the exact test (per element,
// lambda_max <= e^eps * lambda_min); Kraus channels a sampled pure-pair test,
// flagged as non-exhaustive via the method tag.
LdpReport verify_ldp(const Channel& ch, double eps, long samples,
                     std::uint64_t seed);

// The binary privatization mechanism: a randomized response on the Helstrom
// projectors of (rho, sigma) with flip weight kappa = e^eps / (1 + e^eps).
struct BinaryMechanism {
  Channel channel;
  std::array<double, 2> out_p;  // mechanism applied to rho
  std::array<double, 2> out_q;  // mechanism applied to sigma
  double kappa = 0.0;
};
BinaryMechanism binary_mechanism(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, double eps);

// Max over seeded orthogonal pure pairs of the output trace distance; a
// certified lower estimate of the trace-distance contraction coefficient.
double trace_contraction_estimate(const Channel& ch, long trials,
                                  std::uint64_t seed);

// Closed-form extremal constants of eps-LDP channels.
struct LdpExtremes {
  double sup_output_e1 = 0.0;   // max output trace distance
  double eta_tr_cap = 0.0;      // trace-distance contraction cap
  double chi2_cap = 0.0;        // max output chi^2
  double upsilon = 0.0;         // ((e^eps - 1)/(e^eps + 1))^2
  std::optional<double> reverse_pinsker_df;
};
LdpExtremes ldp_extremes(double eps,
                         const std::function<double(double)>* f = nullptr);

// chi^2 data-processing inequality check:
// lhs = chi^2 of the channel outputs, rhs_sampled from a sampled pure-pair
// maximum (an under-estimate), rhs_analytic = 2 E_1^2 * chi2_cap when the
// channel verifies at eps. `holds` is asserted against the analytic cap only.
struct Chi2CheckResult {
  double lhs = 0.0;
  double rhs_sampled = 0.0;
  std::optional<double> rhs_analytic;
  bool verified_ldp = false;
  bool holds = false;
};
Chi2CheckResult chi2_data_processing_check(const Channel& ch,
                                           const DensityMatrix& rho,
                                           const DensityMatrix& sigma,
                                           long pure_pair_trials,
                                           std::uint64_t seed,
                                           std::optional<double> eps = {});

// Random measurement channel mixed toward its outcome-weighted identity just
// enough to sit on the eps-LDP boundary. Used by the verification suite.
Channel make_private_measurement(std::size_t dim, std::size_t outcomes,
                                 double eps, std::uint64_t seed);

// chi^2 between channel outputs (classical for measurements).
double output_chi_squared(const Channel& ch, const DensityMatrix& rho,
                          const DensityMatrix& sigma);
double output_trace_distance(const Channel& ch, const DensityMatrix& rho,
                             const DensityMatrix& sigma);

}  // namespace qdp

#endif  // QDP_LDP_HPP_
