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

#include <doctest.h>

#include <cmath>

#include "qdp/classical.hpp"
#include "qdp/oracle.hpp"

namespace {

using qdp::DensityMatrix;

DensityMatrix diag2(double p0, double p1) {
  return DensityMatrix::from_probabilities({p0, p1});
}

// brute-force reference: full min-sum over all counts
double brute_bayes(double prior, double a, double b, long long n) {
  double total = 0.0;
  for (long long k = 0; k <= n; ++k) {
    const double fa = std::exp(qdp::classical::log_binomial_pmf(n, k, a));
    const double fb = std::exp(qdp::classical::log_binomial_pmf(n, k, b));
    total += std::min(prior * fa, (1.0 - prior) * fb);
  }
  return total;
}

}  // namespace

TEST_CASE("binomial pmf edge probabilities") {
  CHECK(qdp::classical::log_binomial_pmf(5, 0, 0.0) == 0.0);
  CHECK(std::isinf(qdp::classical::log_binomial_pmf(5, 1, 0.0)));
  CHECK(qdp::classical::log_binomial_pmf(5, 5, 1.0) == 0.0);
  CHECK(std::exp(qdp::classical::log_binomial_pmf(4, 2, 0.5)) ==
        doctest::Approx(6.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("binary bayes error matches the brute-force sum") {
  for (long long n : {1, 2, 7, 23, 150}) {
    for (const auto& [a, b] : {std::pair{0.3, 0.7}, {0.45, 0.55}, {0.05, 0.6}}) {
      for (double prior : {0.5, 0.25}) {
        CHECK(qdp::classical::binary_bayes_error(prior, a, b, n) ==
              doctest::Approx(brute_bayes(prior, a, b, n)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("windowed evaluation agrees with the full sum at large n") {
  // kFullSumLimit is 4096; force the windowed branch and compare
  const double full = brute_bayes(0.5, 0.48, 0.52, 5000);
  CHECK(qdp::classical::binary_bayes_error(0.5, 0.48, 0.52, 5000) ==
        doctest::Approx(full).epsilon(1e-10));
}

TEST_CASE("binary sample complexity anchors") {
  SUBCASE("deterministic outcomes need one sample") {
    const auto r =
        qdp::binary_sample_complexity({1.0, 0.0}, {0.0, 1.0}, 0.5, 0.1, 100);
    CHECK(r.n_star == 1);
  }
  SUBCASE("the (0.7, 0.3) scan lands at 9") {
    const auto r =
        qdp::binary_sample_complexity({0.7, 0.3}, {0.3, 0.7}, 0.5, 0.1, 1000);
    REQUIRE(r.n_star.has_value());
    CHECK(*r.n_star == 9);
    CHECK(r.error_trace.at(8) == doctest::Approx(0.12604).epsilon(1e-4));
    CHECK(r.error_trace.at(9) == doctest::Approx(0.09881).epsilon(1e-4));
  }
  SUBCASE("identical distributions never resolve") {
    const auto r =
        qdp::binary_sample_complexity({0.6, 0.4}, {0.6, 0.4}, 0.5, 0.1, 1000);
    CHECK(r.cap_exceeded());
  }
  SUBCASE("trace is nonincreasing for mirrored inputs") {
    const auto r =
        qdp::binary_sample_complexity({0.7, 0.3}, {0.3, 0.7}, 0.5, 0.01, 1000);
    double prev = 1.0;
    for (const auto& [n, err] : r.error_trace) {
      CHECK(err <= prev + 1e-12);
      prev = err;
    }
  }
  SUBCASE("doubling search beyond the linear range equals a direct scan") {
    // error crosses delta above 4096 for this barely separated pair
    const auto r = qdp::binary_sample_complexity({0.51, 0.49}, {0.49, 0.51},
                                                 0.5, 0.05, 1000000);
    REQUIRE(r.n_star.has_value());
    CHECK(*r.n_star > 4096);
    CHECK(qdp::classical::binary_bayes_error(0.5, 0.49, 0.51, *r.n_star) <=
          0.05);
    CHECK(qdp::classical::binary_bayes_error(0.5, 0.49, 0.51, *r.n_star - 1) >
          0.05);
  }
}

TEST_CASE("quantum oracle on the worked pair") {
  const DensityMatrix rho = diag2(0.9, 0.1);
  const DensityMatrix sigma = diag2(0.1, 0.9);
  SUBCASE("single copy error") {
    CHECK(qdp::exact_bayes_error_n(rho, sigma, 0.5, 1) ==
          doctest::Approx(0.1).epsilon(1e-12));
  }
  SUBCASE("n* = 1 at delta = 0.1") {
    const auto r = qdp::quantum_sample_complexity(rho, sigma, 0.5, 0.1, 10);
    CHECK(r.n_star == 1);
  }
  SUBCASE("orthogonal pure states") {
    const auto r = qdp::quantum_sample_complexity(diag2(1.0, 0.0),
                                                  diag2(0.0, 1.0), 0.5, 0.1, 4);
    CHECK(r.n_star == 1);
    CHECK(qdp::exact_bayes_error_n(diag2(1.0, 0.0), diag2(0.0, 1.0), 0.3, 2) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("equal states exceed any cap") {
    const auto r = qdp::quantum_sample_complexity(rho, rho, 0.5, 0.1, 8);
    CHECK(r.cap_exceeded());
  }
  SUBCASE("the dim cap truncates the scan silently") {
    const auto r = qdp::quantum_sample_complexity(rho, rho, 0.5, 0.1, 50);
    CHECK(r.n_cap == 12);  // 2^12 = 4096
  }
  SUBCASE("commuting cross-check against the binomial oracle") {
    for (unsigned n = 1; n <= 6; ++n)
      CHECK(qdp::exact_bayes_error_n(rho, sigma, 0.5, n) ==
            doctest::Approx(qdp::classical::binary_bayes_error(0.5, 0.1, 0.9, n))
                .epsilon(1e-10));
  }
}

TEST_CASE("the fidelity bracket holds for the slow pair") {
  // bracket [26, 79] from the closed-form bounds; the scan must land inside
  const auto r = qdp::binary_sample_complexity({0.6, 0.4}, {0.4, 0.6}, 0.5, 0.1,
                                               10000);
  REQUIRE(r.n_star.has_value());
  CHECK(*r.n_star >= 26);
  CHECK(*r.n_star <= 79);
}

TEST_CASE("ldp witness") {
  const DensityMatrix rho = diag2(0.9, 0.1);
  const DensityMatrix sigma = diag2(0.1, 0.9);
  SUBCASE("worked anchor") {
    const auto r = qdp::ldp_witness(rho, sigma, 0.5, 0.1, std::log(3.0), 1000);
    CHECK(r.n_star == 9);
  }
  SUBCASE("large epsilon approaches the Helstrom statistics") {
    // delta away from the exact tie at 0.1, where a 1e-9 perturbation flips n*
    const auto loose = qdp::ldp_witness(rho, sigma, 0.5, 0.12, 20.0, 1000);
    const auto helstrom =
        qdp::binary_sample_complexity({0.9, 0.1}, {0.1, 0.9}, 0.5, 0.12, 1000);
    CHECK(loose.n_star == helstrom.n_star);
    CHECK(loose.n_star == 1);
  }
  SUBCASE("zero epsilon never resolves") {
    const auto r = qdp::ldp_witness(rho, sigma, 0.5, 0.1, 0.0, 1000);
    CHECK(r.cap_exceeded());
  }
}

TEST_CASE("neyman-pearson scan") {
  const DensityMatrix rho = diag2(0.9, 0.1);
  const DensityMatrix sigma = diag2(0.1, 0.9);
  SUBCASE("orthogonal pure states resolve at one copy") {
    const auto r = qdp::neyman_pearson_scan(diag2(1.0, 0.0), diag2(0.0, 1.0),
                                            0.125, 0.125, 5);
    CHECK(r.n_star == 1);
  }
  SUBCASE("type-II decreases with n") {
    double prev = 1.0;
    for (unsigned n = 1; n <= 5; ++n) {
      const double b = qdp::neyman_pearson_type2(rho, sigma, 0.125, n);
      CHECK(b <= prev + 1e-12);
      prev = b;
    }
  }
  SUBCASE("np water filling basics") {
    // two outcomes, level exactly at the boundary of the better outcome
    const double b =
        qdp::classical::np_min_type2({{0.9, 0.1}, {0.1, 0.9}}, 0.1);
    CHECK(b == doctest::Approx(0.1).epsilon(1e-12));
    // randomization interpolates
    const double b2 =
        qdp::classical::np_min_type2({{0.9, 0.1}, {0.1, 0.9}}, 0.05);
    CHECK(b2 == doctest::Approx(0.1 + 0.5 * 0.9).epsilon(1e-12));
  }
}

TEST_CASE("binomial tail for the repetition lemma") {
  CHECK(qdp::classical::binomial_tail_geq(1, 0.25, 1) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(qdp::classical::binomial_tail_geq(3, 0.5, 2) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qdp::classical::binomial_tail_geq(5, 0.2, 0) == 1.0);
  CHECK(qdp::classical::binomial_tail_geq(5, 0.2, 6) == 0.0);
}
