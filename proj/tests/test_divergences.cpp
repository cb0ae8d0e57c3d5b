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

#include "qdp/divergences.hpp"

namespace {

using qdp::DensityMatrix;
using qdp::Matrix;

const DensityMatrix& rho_a() {
  static const DensityMatrix r = DensityMatrix::from_probabilities({0.9, 0.1});
  return r;
}
const DensityMatrix& rho_b() {
  static const DensityMatrix r = DensityMatrix::from_probabilities({0.1, 0.9});
  return r;
}
const DensityMatrix& ket0() {
  static const DensityMatrix r = DensityMatrix::from_probabilities({1.0, 0.0});
  return r;
}
const DensityMatrix& ket1() {
  static const DensityMatrix r = DensityMatrix::from_probabilities({0.0, 1.0});
  return r;
}

}  // namespace

TEST_CASE("hockey stick on the diagonal pair") {
  CHECK(qdp::hockey_stick(rho_a(), rho_a(), 1.0).value ==
        doctest::Approx(0.0).epsilon(1e-14));
  // classical closed form: max(0.9 - 0.1 g, 0) + max(0.1 - 0.9 g, 0)
  CHECK(qdp::hockey_stick(rho_a(), rho_b(), 1.0).value ==
        doctest::Approx(0.8).epsilon(1e-12));
  CHECK(qdp::hockey_stick(rho_a(), rho_b(), 2.0).value ==
        doctest::Approx(0.7).epsilon(1e-12));
  CHECK(qdp::hockey_stick(rho_a(), rho_b(), 9.0).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (double gamma : {0.5, 1.0, 3.0})
    CHECK(qdp::hockey_stick(ket0(), ket1(), gamma).value ==
          doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(qdp::hockey_stick(rho_a(), rho_b(), -1.0), qdp::Error);
  CHECK_THROWS_AS(
      qdp::hockey_stick(rho_a(), DensityMatrix::from_probabilities({1.0}), 1.0),
      qdp::Error);
}

TEST_CASE("fidelity and bures") {
  CHECK(qdp::fidelity(rho_a(), rho_a()).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qdp::fidelity(ket0(), ket1()).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  // classical closed form sum sqrt(p q) = 2 sqrt(0.09)
  CHECK(qdp::fidelity(rho_a(), rho_b()).value ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK(qdp::bures_distance(rho_a(), rho_b()) ==
        doctest::Approx(std::sqrt(0.4)).epsilon(1e-12));
}

TEST_CASE("max relative entropy") {
  CHECK(qdp::max_relative_entropy(rho_a(), rho_a()).value ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(qdp::max_relative_entropy(rho_a(), rho_b()).value ==
        doctest::Approx(std::log(9.0)).epsilon(1e-12));
  CHECK(std::isinf(qdp::max_relative_entropy(ket0(), ket1()).value));
}

TEST_CASE("petz quantities") {
  SUBCASE("equal states") {
    const auto q = qdp::petz_quantities(rho_a(), rho_a(), 0.7);
    CHECK(q.q_bar == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.d_bar == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(q.h_bar == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("classical closed form at alpha = 1/2") {
    const auto q = qdp::petz_quantities(rho_a(), rho_b(), 0.5);
    CHECK(q.q_bar == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(q.h_bar == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(q.d_bar == doctest::Approx(-2.0 * std::log(0.6)).epsilon(1e-12));
  }
  SUBCASE("support violation above alpha 1") {
    const auto q = qdp::petz_quantities(ket0(), ket1(), 1.5);
    CHECK(std::isinf(q.d_bar));
  }
  SUBCASE("alpha range") {
    CHECK_THROWS_AS(qdp::petz_quantities(rho_a(), rho_b(), 2.5), qdp::Error);
    CHECK_THROWS_AS(qdp::petz_quantities(rho_a(), rho_b(), 1.0), qdp::Error);
  }
  SUBCASE("d and h are consistent transforms of q") {
    const auto q = qdp::petz_quantities(rho_a(), rho_b(), 1.7);
    CHECK(q.d_bar == doctest::Approx(std::log(q.q_bar) / 0.7).epsilon(1e-12));
    CHECK(q.h_bar == doctest::Approx((q.q_bar - 1.0) / 0.7).epsilon(1e-12));
  }
}

TEST_CASE("sandwiched renyi") {
  CHECK(qdp::sandwiched_renyi(rho_a(), rho_a(), 0.5).value ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(qdp::sandwiched_renyi(rho_a(), rho_b(), 0.5).value ==
        doctest::Approx(-2.0 * std::log(0.6)).epsilon(1e-12));
  CHECK_THROWS_AS(qdp::sandwiched_renyi(rho_a(), rho_b(), 0.4), qdp::Error);
}

TEST_CASE("integral hellinger on the diagonal pair") {
  const auto hr = qdp::integral_hellinger(rho_a(), rho_b(), 0.5);
  CHECK(hr.hellinger.value == doctest::Approx(0.8).epsilon(1e-6));
  CHECK(hr.hellinger.abs_error_estimate < 1e-6);
  CHECK(hr.hellinger.method == qdp::Method::kQuadrature);
  // D_alpha from the displayed transform
  CHECK(hr.renyi.value ==
        doctest::Approx(std::log(1.0 - 0.5 * 0.8) / (-0.5)).epsilon(1e-6));

  const auto same = qdp::integral_hellinger(rho_a(), rho_a(), 0.5);
  CHECK(same.hellinger.value == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("unreachable tolerance raises a quadrature failure") {
  const DensityMatrix rho(qdp::random_density(2, 2, 31));
  const DensityMatrix sigma(qdp::random_density(2, 2, 32));
  qdp::QuadratureConfig cfg;
  cfg.max_subdivisions = 1;
  cfg.rel_tol = 1e-300;
  cfg.abs_tol = 1e-300;
  CHECK_THROWS_AS(qdp::integral_hellinger(rho, sigma, 0.5, cfg), qdp::Error);
}

TEST_CASE("integral hellinger handles infinite d_max") {
  // disjoint supports: classical H_alpha = 1/(1-alpha)
  const auto hr = qdp::integral_hellinger(ket0(), ket1(), 0.5);
  CHECK(hr.hellinger.value == doctest::Approx(2.0).epsilon(1e-6));
  const auto h2 = qdp::integral_hellinger(ket0(), ket1(), 2.0);
  CHECK(std::isinf(h2.hellinger.value));
}

TEST_CASE("f-divergence integral specializations") {
  SUBCASE("f'' = 2 gives chi squared") {
    const double via_fpp =
        qdp::f_divergence_integral([](double) { return 2.0; }, rho_a(), rho_b())
            .value;
    CHECK(via_fpp == doctest::Approx(qdp::chi_squared(rho_a(), rho_b()).value)
                         .epsilon(1e-6));
  }
  SUBCASE("equal states vanish") {
    CHECK(qdp::f_divergence_integral([](double) { return 2.0; }, rho_a(),
                                     rho_a())
              .value == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("f'' = 1/x on a commuting pair gives the relative entropy") {
    const double via_fpp = qdp::f_divergence_integral(
                               [](double x) { return 1.0 / x; }, rho_a(), rho_b())
                               .value;
    CHECK(via_fpp == doctest::Approx(0.8 * std::log(9.0)).epsilon(1e-6));
  }
}

TEST_CASE("chi squared") {
  CHECK(qdp::chi_squared(rho_a(), rho_a()).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  // classical sum p^2/q - 1
  CHECK(qdp::chi_squared(rho_a(), rho_b()).value ==
        doctest::Approx(0.81 / 0.1 + 0.01 / 0.9 - 1.0).epsilon(1e-12));
  CHECK(std::isinf(qdp::chi_squared(ket0(), ket1()).value));
}

TEST_CASE("relative entropy") {
  CHECK(qdp::relative_entropy(rho_a(), rho_a()).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(qdp::relative_entropy(rho_a(), rho_b()).value ==
        doctest::Approx(0.8 * std::log(9.0)).epsilon(1e-12));
  CHECK(std::isinf(qdp::relative_entropy(ket0(), ket1()).value));
}

TEST_CASE("jensen shannon") {
  CHECK(qdp::jensen_shannon(rho_a(), rho_a(), 0.5).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  // 0.9 ln 1.8 + 0.1 ln 0.2
  CHECK(qdp::jensen_shannon(rho_a(), rho_b(), 0.5).value ==
        doctest::Approx(0.9 * std::log(1.8) + 0.1 * std::log(0.2))
            .epsilon(1e-10));
  CHECK(qdp::jensen_shannon(ket0(), ket1(), 0.5).value ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(qdp::jensen_shannon(ket0(), ket1(), 0.25).value ==
        doctest::Approx(qdp::binary_entropy(0.25)).epsilon(1e-10));
  CHECK_THROWS_AS(qdp::jensen_shannon(rho_a(), rho_b(), 0.0), qdp::Error);
}
