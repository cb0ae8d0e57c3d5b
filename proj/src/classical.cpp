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

#include "qdp/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qdp/matrix.hpp"

namespace qdp::classical {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Full summation below this n; windowed summation above.
constexpr long long kFullSumLimit = 4096;

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void check_pair(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size() || p.empty())
    throw Error(ErrorKind::kDimensionMismatch,
                "distributions must have equal nonzero length");
}

}  // namespace

double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q) {
  check_pair(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

double hellinger_alpha(const std::vector<double>& p,
                       const std::vector<double>& q, double alpha) {
  check_pair(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) {
      if (alpha > 1.0) return kInf;
      continue;
    }
    s += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  }
  return (s - 1.0) / (alpha - 1.0);
}

double chi_squared(const std::vector<double>& p, const std::vector<double>& q) {
  check_pair(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] <= 0.0) {
      if (p[i] > 0.0) return kInf;
      continue;
    }
    s += p[i] * p[i] / q[i];
  }
  return std::max(s - 1.0, 0.0);
}

double relative_entropy(const std::vector<double>& p,
                        const std::vector<double>& q) {
  check_pair(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    s += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(s, 0.0);
}

double jensen_shannon(const std::vector<double>& p, const std::vector<double>& q,
                      double prior) {
  check_pair(p, q);
  std::vector<double> mix(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    mix[i] = prior * p[i] + (1.0 - prior) * q[i];
  return prior * relative_entropy(p, mix) +
         (1.0 - prior) * relative_entropy(q, mix);
}

double log_binomial_pmf(long long n, long long k, double a) {
  if (k < 0 || k > n) return -kInf;
  if (a <= 0.0) return k == 0 ? 0.0 : -kInf;
  if (a >= 1.0) return k == n ? 0.0 : -kInf;
  const double lc = std::lgamma(static_cast<double>(n + 1)) -
                    std::lgamma(static_cast<double>(k + 1)) -
                    std::lgamma(static_cast<double>(n - k + 1));
  return lc + k * std::log(a) + (n - k) * std::log1p(-a);
}

namespace {

double windowed_min_sum(double prior, double a, double b, long long n,
                        long long lo, long long hi) {
  KahanSum acc;
  const double log_prior = std::log(prior);
  const double log_coprior = std::log1p(-prior);
  for (long long k = lo; k <= hi; ++k) {
    const double ta = log_prior + log_binomial_pmf(n, k, a);
    const double tb = log_coprior + log_binomial_pmf(n, k, b);
    const double m = std::min(ta, tb);
    if (m == -kInf) continue;
    acc.add(std::exp(m));
  }
  return acc.sum;
}

}  // namespace

double binary_bayes_error(double prior, double a, double b, long long n) {
  if (!(prior > 0.0 && prior < 1.0))
    throw Error(ErrorKind::kRangeViolation, "prior must be in (0,1)");
  if (n < 1) throw Error(ErrorKind::kRangeViolation, "n must be >= 1");
  if (n <= kFullSumLimit) return windowed_min_sum(prior, a, b, n, 0, n);
  // Everything beyond 6 sqrt(n) of both means is below 1e-30 total mass
  // (Hoeffding), far under the tolerances used anywhere downstream.
  const double width = 6.0 * std::sqrt(static_cast<double>(n));
  const double mean_lo = std::min(a, b) * n;
  const double mean_hi = std::max(a, b) * n;
  const long long lo =
      std::max<long long>(0, static_cast<long long>(std::floor(mean_lo - width)));
  const long long hi = std::min<long long>(
      n, static_cast<long long>(std::ceil(mean_hi + width)));
  return windowed_min_sum(prior, a, b, n, lo, hi);
}

double binomial_tail_geq(long long r, double alpha, long long threshold) {
  if (threshold <= 0) return 1.0;
  if (threshold > r) return 0.0;
  KahanSum acc;
  for (long long k = threshold; k <= r; ++k)
    acc.add(std::exp(log_binomial_pmf(r, k, alpha)));
  return std::min(acc.sum, 1.0);
}

double np_min_type2(const std::vector<std::pair<double, double>>& outcomes,
                    double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::kRangeViolation, "type-I level must be in [0,1]");
  // Sort by likelihood ratio pa/pb descending; pb == 0 outcomes are free.
  std::vector<std::size_t> order(outcomes.size());
  std::iota(order.begin(), order.end(), 0);
  auto ratio = [&](std::size_t i) {
    const auto& [pa, pb] = outcomes[i];
    if (pb <= 0.0) return pa > 0.0 ? kInf : 0.0;
    return pa / pb;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return ratio(x) > ratio(y); });
  const double needed = 1.0 - alpha;  // mass of pa the acceptance region must keep
  double got_a = 0.0;
  double got_b = 0.0;
  for (std::size_t idx : order) {
    const auto& [pa, pb] = outcomes[idx];
    if (got_a >= needed) break;
    if (got_a + pa >= needed) {
      const double frac = pa > 0.0 ? (needed - got_a) / pa : 1.0;
      got_b += frac * pb;
      got_a = needed;
      break;
    }
    got_a += pa;
    got_b += pb;
  }
  return std::min(got_b, 1.0);
}

}  // namespace qdp::classical
