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

#ifndef QDP_CLASSICAL_HPP_
#define QDP_CLASSICAL_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace qdp::classical {

// Divergences between finite probability vectors, used as commuting-case
// oracles for the quantum implementations and as fast paths for measurement
// outputs.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);
double hellinger_alpha(const std::vector<double>& p, const std::vector<double>& q,
                       double alpha);
double chi_squared(const std::vector<double>& p, const std::vector<double>& q);
double relative_entropy(const std::vector<double>& p,
                        const std::vector<double>& q);
double jensen_shannon(const std::vector<double>& p, const std::vector<double>& q,
                      double prior);

// log of the Binomial(n, a) mass at k, safe for a in {0, 1}.
double log_binomial_pmf(long long n, long long k, double a);

// Exact Bayes error for n iid samples of a binary source: outcome counts are
// binomial, and the error is sum_k min(prior * Binom(n,a,k),
// (1-prior) * Binom(n,b,k)). Evaluated in log space with compensated
// summation; for large n the sum is restricted to a window that carries all
// mass above 1e-30 per the Hoeffding tail bound.
double binary_bayes_error(double prior, double a, double b, long long n);

// P(Binomial(r, alpha) >= threshold), compensated log-space sum.
double binomial_tail_geq(long long r, double alpha, long long threshold);

// Minimal type-II error at type-I level alpha for a finite outcome set with
// likelihoods (pa_i, pb_i): Neyman-Pearson with randomization at the marginal
// outcome.
double np_min_type2(const std::vector<std::pair<double, double>>& outcomes,
                    double alpha);

}  // namespace qdp::classical

#endif  // QDP_CLASSICAL_HPP_
