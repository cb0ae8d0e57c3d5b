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

#ifndef QDP_ORACLE_HPP_
#define QDP_ORACLE_HPP_

#include <map>
#include <optional>

#include "qdp/divergences.hpp"
#include "qdp/ldp.hpp"

namespace qdp {

enum class OracleMethod { kTensorEig, kBinomialScan, kNeymanPearsonScan };

struct OracleResult {
  std::optional<long long> n_star;          // empty = cap exceeded
  long long n_cap = 0;                      // largest n that was in scope
  std::map<long long, double> error_trace;  // n -> exact error at n
  OracleMethod method = OracleMethod::kTensorEig;
  bool cap_exceeded() const { return !n_star.has_value(); }
};

// Exact n-copy Bayes error p - p E_{(1-p)/p}(rho^n || sigma^n) via tensor
// powers and the eigensolver. Throws DimCapExceeded when dim^n > 4096.
double exact_bayes_error_n(const DensityMatrix& rho, const DensityMatrix& sigma,
                           double p, unsigned n);

// Least n with exact Bayes error <= delta, by linear scan (monotonicity of
// the quantum trace in n is not assumed). The scan is silently capped at the
// largest n with dim^n <= 4096.
OracleResult quantum_sample_complexity(const DensityMatrix& rho,
                                       const DensityMatrix& sigma, double p,
                                       double delta, long long n_max);

// Exact Bayes error scan for iid binary samples. Linear scan up to 4096;
// beyond that a doubling search plus bisection, which is exact because the
// classical Bayes error is nonincreasing in n (a test on n+1 samples may
// always ignore one).
OracleResult binary_sample_complexity(const std::vector<double>& p_dist,
                                      const std::vector<double>& q_dist,
                                      double p, double delta, long long n_max);

// Binary mechanism at eps followed by the binomial scan: an achievable LDP
// sample size, hence an upper witness for the private sample complexity.
OracleResult ldp_witness(const DensityMatrix& rho, const DensityMatrix& sigma,
                         double p, double delta, double eps, long long n_max);

// Least n admitting a test with type-I <= alpha and type-II <= beta.
// Commuting pairs take the exact water-filling route over the joint
// eigenvalue products; non-commuting pairs sweep the threshold t of
// {rho^n - t sigma^n > 0} with randomization on the boundary eigenspace.
OracleResult neyman_pearson_scan(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, double alpha,
                                 double beta, long long n_max);

// Minimal type-II error at level alpha for n copies (exposed for tests).
double neyman_pearson_type2(const DensityMatrix& rho, const DensityMatrix& sigma,
                            double alpha, unsigned n);

// Forces the threshold-sweep route even on commuting inputs, so the two
// routes can be cross-validated against each other.
double neyman_pearson_type2_threshold(const DensityMatrix& rho,
                                      const DensityMatrix& sigma, double alpha,
                                      unsigned n);

}  // namespace qdp

#endif  // QDP_ORACLE_HPP_
