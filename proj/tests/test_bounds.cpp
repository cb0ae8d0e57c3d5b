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

#include "qdp/bounds.hpp"
#include "qdp/sweep.hpp"

namespace {

using qdp::DensityMatrix;

DensityMatrix diag2(double p0, double p1) {
  return DensityMatrix::from_probabilities({p0, p1});
}

const DensityMatrix& rho_a() {
  static const DensityMatrix r = diag2(0.9, 0.1);
  return r;
}
const DensityMatrix& rho_b() {
  static const DensityMatrix r = diag2(0.1, 0.9);
  return r;
}

}  // namespace

TEST_CASE("bayes error") {
  CHECK(qdp::bayes_error(rho_a(), rho_a(), 0.3) ==
        doctest::Approx(0.3).epsilon(1e-12));
  CHECK(qdp::bayes_error(diag2(1, 0), diag2(0, 1), 0.5) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(qdp::bayes_error(rho_a(), rho_b(), 0.5) ==
        doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("fidelity bounds on the worked pairs") {
  SUBCASE("0.9/0.1 pair") {
    const auto cert = qdp::fidelity_sc_bounds(rho_a(), rho_b(), 0.5, 0.1);
    const auto* lower = cert.find("fidelity-lower");
    const auto* upper = cert.find("fidelity-upper");
    REQUIRE(lower != nullptr);
    REQUIRE(upper != nullptr);
    CHECK(lower->raw == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(upper->raw ==
          doctest::Approx(std::log(5.0) / -std::log(0.6)).epsilon(1e-12));
    CHECK(*upper->ceiling == 4);
    CHECK(lower->assumptions_met);
  }
  SUBCASE("0.6/0.4 pair brackets [26, 79]") {
    const auto cert =
        qdp::fidelity_sc_bounds(diag2(0.6, 0.4), diag2(0.4, 0.6), 0.5, 0.1);
    CHECK(cert.find("fidelity-lower")->raw ==
          doctest::Approx(25.03).epsilon(1e-3));
    CHECK(*cert.find("fidelity-lower")->ceiling == 26);
    CHECK(*cert.find("fidelity-upper")->ceiling == 79);
  }
  SUBCASE("equal states are degenerate and flagged") {
    const auto cert = qdp::fidelity_sc_bounds(rho_a(), rho_a(), 0.5, 0.1);
    CHECK(std::isinf(cert.find("fidelity-lower")->raw));
    CHECK_FALSE(cert.find("fidelity-lower")->assumptions_met);
  }
  SUBCASE("delta > p is recorded, not thrown") {
    const auto cert = qdp::fidelity_sc_bounds(rho_a(), rho_b(), 0.2, 0.3);
    CHECK_FALSE(cert.find("fidelity-upper")->assumptions_met);
  }
}

TEST_CASE("prior bounds") {
  SUBCASE("lambda at p = 1/2 and the js lower constant") {
    const auto cert = qdp::prior_sc_bounds(rho_a(), rho_b(), 0.5);
    const double js = 0.9 * std::log(1.8) + 0.1 * std::log(0.2);
    CHECK(cert.find("js-prior-lower")->raw ==
          doctest::Approx((3.0 / 32.0) * std::log(2.0) / js).epsilon(1e-9));
    CHECK(cert.delta == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(cert.find("petz-prior-upper")->assumptions_met);
  }
  SUBCASE("equal states flag degenerate entries") {
    const auto cert = qdp::prior_sc_bounds(rho_a(), rho_a(), 0.25);
    CHECK(std::isinf(cert.find("js-prior-lower")->raw));
    CHECK(cert.find("js-prior-lower")->note == "degenerate");
    CHECK(std::isinf(cert.find("petz-prior-upper")->raw));
  }
  SUBCASE("oracle bracket at p = 1/4") {
    // delta = p/4 = 1/16; the commuting oracle value must sit in the sandwich
    const auto cert = qdp::prior_sc_bounds(rho_a(), rho_b(), 0.25);
    double best_lower = 0.0;
    double best_upper = qdp::kInf;
    for (const auto& e : cert.entries) {
      if (!e.assumptions_met || !std::isfinite(e.raw)) continue;
      if (e.side == qdp::BoundSide::kLower)
        best_lower = std::max(best_lower, e.raw);
      else
        best_upper = std::min(best_upper, static_cast<double>(*e.ceiling));
    }
    CHECK(best_lower <= best_upper);
  }
}

TEST_CASE("js hellinger constants") {
  CHECK(qdp::js_hellinger_constant(0.5, 0.5) ==
        doctest::Approx(0.5).epsilon(1e-14));
  SUBCASE("sqrt2 lambda algebra at alpha = 1/4") {
    const double alpha = 0.25;
    const double lambda = qdp::js_hellinger_sqrt2_lambda(alpha);
    CHECK(lambda == doctest::Approx(std::log(2.0) / (2.0 * std::log(4.0)))
                        .epsilon(1e-14));
    const double c = qdp::js_hellinger_constant(alpha, lambda);
    // same constant through the rewritten factorization
    const double rewritten = alpha *
                             std::pow(lambda * (1.0 - alpha) / (1.0 - lambda),
                                      lambda) *
                             std::exp(lambda * std::log(1.0 / alpha));
    CHECK(c == doctest::Approx(rewritten).epsilon(1e-12));
    CHECK(c <= qdp::js_hellinger_sqrt2_constant(alpha) + 1e-14);
  }
  CHECK(qdp::js_hellinger_improvement_factor() ==
        doctest::Approx(32.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(qdp::js_hellinger_constant(1.0, 0.5), qdp::Error);
}

TEST_CASE("ldp certificate worked entries") {
  const double eps = std::log(3.0);
  const auto cert = qdp::ldp_sc_bounds(rho_a(), rho_b(), 0.5, 0.1, eps);
  CHECK(*cert.find("achv-upper-half")->ceiling == 21);
  CHECK(*cert.find("private-hellinger-lower")->ceiling == 2);
  CHECK(*cert.find("private-chi2-lower")->ceiling == 1);
  CHECK(cert.find("private-chi2-lower")->raw ==
        doctest::Approx(0.75).epsilon(1e-10));
  CHECK(cert.find("achv-upper-half")->raw ==
        doctest::Approx(4.0 * 2.0 * std::log(5.0) / 0.64).epsilon(1e-10));
  SUBCASE("epsilon = 0 marks the degenerate regime") {
    const auto degen = qdp::ldp_sc_bounds(rho_a(), rho_b(), 0.5, 0.1, 0.0);
    CHECK(degen.degenerate_privacy);
    for (const auto& e : degen.entries) CHECK(std::isinf(e.raw));
  }
}

TEST_CASE("conversions") {
  SUBCASE("symmetric levels give p = 1/2") {
    const auto b = qdp::pf_to_bayes(0.125, 0.125);
    CHECK(b.p == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(b.delta_for_upper == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
    CHECK(b.delta_for_lower == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
    CHECK(b.equivalence_up_to_constant);
  }
  SUBCASE("mixed levels") {
    const auto b = qdp::pf_to_bayes(0.0625, 0.125);
    CHECK(b.p == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(b.delta_for_upper == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
  }
  SUBCASE("bayes to pf") {
    const auto b = qdp::bayes_to_pf(0.5, 0.05);
    CHECK(b.alpha_lower == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(b.beta_lower == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(b.alpha_upper == doctest::Approx(0.05).epsilon(1e-14));
  }
  CHECK_THROWS_AS(qdp::pf_to_bayes(0.0, 0.5), qdp::Error);
}

TEST_CASE("majority boost") {
  SUBCASE("quarter to quarter") {
    const auto b = qdp::majority_boost(0.25, 0.25);
    CHECK(b.r_bound == 32);
    CHECK(b.r_odd == 33);
    CHECK(b.exact_error.at(1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(b.exact_error.at(33) <= 0.25);
    CHECK(b.bound_holds);
  }
  SUBCASE("0.1 to 0.01") {
    const auto b = qdp::majority_boost(0.1, 0.01);
    CHECK(b.r_bound == 64);
    CHECK(b.exact_error.at(65) <= 0.01);
    CHECK(b.bound_holds);
  }
  CHECK_THROWS_AS(qdp::majority_boost(0.3, 0.1), qdp::Error);
  CHECK_THROWS_AS(qdp::majority_boost(0.2, 0.25), qdp::Error);
}

TEST_CASE("asymmetric ldp bounds worked values") {
  const double eps = std::log(3.0);
  const auto cert =
      qdp::asymmetric_ldp_bounds(rho_a(), rho_b(), 0.125, 0.125, eps);
  CHECK(cert.find("asym-e1-upper-uc")->raw ==
        doctest::Approx(4.0 * std::log(16.0) / 0.64).epsilon(1e-10));
  CHECK(cert.find("asym-e1-lower-uc")->raw ==
        doctest::Approx((49.0 / 64.0) / ((1.0 / 3.0) * 2.0 * 0.64))
            .epsilon(1e-10));
  CHECK(cert.find("asym-e1-upper-uc")->up_to_universal_constant);
  CHECK_THROWS_AS(
      qdp::asymmetric_ldp_bounds(rho_a(), rho_b(), 0.3, 0.125, eps),
      qdp::Error);
}

TEST_CASE("sweep rows and csv") {
  const std::vector<double> grid = {0.5, 1.0, 2.0};
  const auto rows = qdp::compute_sweep(rho_a(), rho_b(), 0.5, 0.1, grid, 10000);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].epsilon == 1.0);
  for (const auto& r : rows) {
    CHECK(std::isfinite(r.lower_chi2));
    CHECK(r.witness_n.has_value());
  }
  const std::string csv = qdp::sweep_csv(rows);
  CHECK(csv.rfind("epsilon,lower_hellinger,lower_chi2,lower_js,"
                  "upper_achievability,upper_general,witness_n,best_lower_tag",
                  0) == 0);
  SUBCASE("single point grid") {
    const auto one = qdp::compute_sweep(rho_a(), rho_b(), 0.5, 0.1, {1.0}, 1000);
    CHECK(one.size() == 1);
  }
  SUBCASE("identical states produce an all-inf flagged row") {
    const auto degen =
        qdp::compute_sweep(rho_a(), rho_a(), 0.5, 0.1, {1.0}, 1000);
    CHECK(std::isinf(degen[0].lower_chi2));
    CHECK_FALSE(degen[0].witness_n.has_value());
    CHECK(degen[0].best_lower_tag == "degenerate");
  }
  SUBCASE("grid must increase") {
    CHECK_THROWS_AS(qdp::compute_sweep(rho_a(), rho_b(), 0.5, 0.1, {1.0, 1.0}),
                    qdp::Error);
    CHECK_THROWS_AS(
        qdp::compute_sweep(rho_a(), rho_b(), 0.5, 0.1, std::vector<double>{}),
        qdp::Error);
  }
}

TEST_CASE("bound ceiling nudges exact integers down") {
  CHECK(qdp::bound_ceiling(20.118) == 21);
  CHECK(qdp::bound_ceiling(1.0 + 1e-13) == 1);
  CHECK(qdp::bound_ceiling(9.0) == 9);
  CHECK(qdp::bound_ceiling(0.75) == 1);
}
