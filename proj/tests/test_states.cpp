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

#include "qdp/states.hpp"

using qdp::cplx;
using qdp::DensityMatrix;
using qdp::Matrix;

TEST_CASE("positive part trace") {
  SUBCASE("diagonal") {
    CHECK(qdp::positive_part_trace(Matrix::diag({0.8, -0.8})) ==
          doctest::Approx(0.8).epsilon(1e-14));
  }
  SUBCASE("psd keeps the full trace") {
    const DensityMatrix rho = qdp::random_density(4, 4, 7);
    CHECK(qdp::positive_part_trace(rho.matrix()) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("hand-evaluated mixed-sign case") {
    Matrix h = Matrix::diag({0.9, 0.1});
    Matrix other = Matrix::diag({0.1, 0.9});
    other *= cplx(2.0);
    h -= other;
    CHECK(qdp::positive_part_trace(h) == doctest::Approx(0.7).epsilon(1e-14));
  }
}

TEST_CASE("matrix function") {
  SUBCASE("sqrt then square restores the state") {
    const DensityMatrix rho = qdp::random_density(3, 3, 5);
    const Matrix root = qdp::matrix_function(
        rho.matrix(), [](double x) { return std::sqrt(x); }, true);
    Matrix sq = qdp::matmul(root, root);
    sq -= rho.matrix();
    CHECK(sq.max_abs() < 1e-9);
  }
  SUBCASE("log of identity is zero") {
    const Matrix out = qdp::matrix_function(
        Matrix::identity(3), [](double x) { return std::log(x); }, true);
    CHECK(out.max_abs() < 1e-12);
  }
  SUBCASE("on-support square root of a singular diagonal") {
    const Matrix out = qdp::matrix_function(
        Matrix::diag({0.25, 0.0}), [](double x) { return std::sqrt(x); }, true);
    CHECK(out(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(out(1, 1)) < 1e-12);
  }
  SUBCASE("off-support inverse is rejected without on_support") {
    CHECK_THROWS_AS(qdp::matrix_function(
                        Matrix::diag({1.0, 0.0}),
                        [](double x) { return 1.0 / x; }, false),
                    qdp::Error);
  }
}

TEST_CASE("tensor power") {
  const DensityMatrix rho = qdp::random_density(2, 2, 3);
  SUBCASE("n = 1 is the input") {
    Matrix diff = qdp::tensor_power(rho.matrix(), 1);
    diff -= rho.matrix();
    CHECK(diff.max_abs() == 0.0);
  }
  SUBCASE("trace multiplicativity") {
    const Matrix cubed = qdp::tensor_power(rho.matrix(), 3);
    CHECK(cubed.trace().real() == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("eigenvalues of a diagonal square") {
    const Matrix squared = qdp::tensor_power(Matrix::diag({0.9, 0.1}), 2);
    const std::vector<double> evals = qdp::eigvalsh(squared);
    CHECK(evals[0] == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(evals[1] == doctest::Approx(0.09).epsilon(1e-12));
    CHECK(evals[2] == doctest::Approx(0.09).epsilon(1e-12));
    CHECK(evals[3] == doctest::Approx(0.01).epsilon(1e-12));
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(qdp::tensor_power(rho.matrix(), 13), qdp::Error);
  }
}

TEST_CASE("random density") {
  SUBCASE("pure states have unit purity") {
    const DensityMatrix rho = qdp::random_density(4, 1, 9);
    const Matrix sq = qdp::matmul(rho.matrix(), rho.matrix());
    CHECK(sq.trace().real() == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("valid spectrum") {
    const DensityMatrix rho = qdp::random_density(5, 3, 11);
    const std::vector<double> evals = qdp::eigvalsh(rho.matrix());
    double sum = 0.0;
    for (double v : evals) {
      CHECK(v > -1e-12);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("same seed, identical matrices") {
    const DensityMatrix a = qdp::random_density(3, 3, 123);
    const DensityMatrix b = qdp::random_density(3, 3, 123);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(a.matrix()(i, j) == b.matrix()(i, j));
  }
  SUBCASE("rank out of range") {
    CHECK_THROWS_AS(qdp::random_density(3, 0, 1), qdp::Error);
    CHECK_THROWS_AS(qdp::random_density(3, 4, 1), qdp::Error);
  }
}

TEST_CASE("density matrix validation names the failing invariant") {
  SUBCASE("trace") {
    try {
      DensityMatrix bad(Matrix::diag({0.49, 0.49}));
      CHECK(false);
    } catch (const qdp::Error& e) {
      CHECK(e.kind() == qdp::ErrorKind::kValidationError);
      CHECK(std::string(e.what()).find("trace") != std::string::npos);
    }
  }
  SUBCASE("hermiticity") {
    Matrix m = Matrix::diag({0.5, 0.5});
    m(0, 1) = cplx(0.1, 0.0);
    try {
      DensityMatrix bad(m);
      CHECK(false);
    } catch (const qdp::Error& e) {
      CHECK(std::string(e.what()).find("hermiticity") != std::string::npos);
    }
  }
  SUBCASE("negativity") {
    CHECK_THROWS_AS(DensityMatrix(Matrix::diag({1.2, -0.2})), qdp::Error);
  }
}

TEST_CASE("orthonormal pair is orthonormal and seeded") {
  const auto pair = qdp::random_orthonormal_pair(4, 77);
  cplx overlap = 0.0;
  double n1 = 0.0, n2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    overlap += std::conj(pair.first[i]) * pair.second[i];
    n1 += std::norm(pair.first[i]);
    n2 += std::norm(pair.second[i]);
  }
  CHECK(std::abs(overlap) < 1e-12);
  CHECK(n1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
  const auto again = qdp::random_orthonormal_pair(4, 77);
  CHECK(pair.first[0] == again.first[0]);
}
