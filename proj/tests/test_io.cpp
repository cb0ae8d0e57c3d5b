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
#include <cstdio>
#include <string>

#include "qdp/io.hpp"
#include "qdp/oracle.hpp"

namespace {

using qdp::io::json;

std::string temp_path(const char* name) {
  return std::string("/tmp/qdp_io_test_") + name;
}

}  // namespace

TEST_CASE("state round trip") {
  const qdp::DensityMatrix rho = qdp::random_density(3, 2, 19);
  const std::string path = temp_path("state.json");
  qdp::io::save_state(path, rho);
  const qdp::DensityMatrix back = qdp::io::load_state(path);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(back.matrix()(i, j) == rho.matrix()(i, j));
  std::remove(path.c_str());
}

TEST_CASE("state diagnostics name the invariant") {
  SUBCASE("bad trace") {
    const json j = json::parse(
        R"({"dim": 2, "matrix": [[[0.49,0],[0,0]],[[0,0],[0.49,0]]]})");
    try {
      qdp::io::state_from_json(j);
      CHECK(false);
    } catch (const qdp::Error& e) {
      CHECK(e.kind() == qdp::ErrorKind::kValidationError);
      CHECK(std::string(e.what()).find("trace") != std::string::npos);
      CHECK(std::string(e.what()).find("0.02") != std::string::npos);
    }
  }
  SUBCASE("non-hermitian entry") {
    const json j = json::parse(
        R"({"dim": 2, "matrix": [[[0.5,0],[0.3,0]],[[0.1,0],[0.5,0]]]})");
    try {
      qdp::io::state_from_json(j);
      CHECK(false);
    } catch (const qdp::Error& e) {
      CHECK(std::string(e.what()).find("hermiticity") != std::string::npos);
    }
  }
  SUBCASE("shape errors carry the position") {
    const json j = json::parse(R"({"dim": 2, "matrix": [[[0.5,0]]]})");
    try {
      qdp::io::state_from_json(j);
      CHECK(false);
    } catch (const qdp::Error& e) {
      CHECK(e.kind() == qdp::ErrorKind::kParseError);
    }
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(qdp::io::load_state("/tmp/definitely_missing_qdp.json"),
                    qdp::Error);
  }
}

TEST_CASE("channel round trip") {
  const qdp::DensityMatrix rho = qdp::random_density(2, 2, 3);
  const qdp::DensityMatrix sigma = qdp::random_density(2, 2, 4);
  const qdp::Channel ch =
      qdp::binary_mechanism(rho, sigma, std::log(2.0)).channel;
  const json j = qdp::io::channel_to_json(ch);
  const qdp::Channel back = qdp::io::channel_from_json(j);
  CHECK(back.kind() == qdp::ChannelKind::kMeasurement);
  CHECK(back.ops().size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      CHECK(back.ops()[0](i, k) == ch.ops()[0](i, k));
}

TEST_CASE("reports survive a json round trip bit for bit") {
  const qdp::DensityMatrix rho = qdp::random_density(2, 2, 5);
  const qdp::DensityMatrix sigma = qdp::random_density(2, 2, 6);
  SUBCASE("certificate") {
    const qdp::BoundsCertificate cert =
        qdp::ldp_sc_bounds(rho, sigma, 0.5, 0.1, 1.3);
    const json j = qdp::io::certificate_to_json(cert);
    const qdp::BoundsCertificate back = qdp::io::certificate_from_json(j);
    REQUIRE(back.entries.size() == cert.entries.size());
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
      CHECK(back.entries[i].raw == cert.entries[i].raw);
      CHECK(back.entries[i].name == cert.entries[i].name);
      CHECK(back.entries[i].ceiling == cert.entries[i].ceiling);
    }
    CHECK(qdp::io::certificate_to_json(back).dump() == j.dump());
  }
  SUBCASE("oracle result with infinities in the trace") {
    qdp::OracleResult r;
    r.method = qdp::OracleMethod::kBinomialScan;
    r.n_cap = 100;
    r.error_trace[1] = 0.1 + 1e-17;
    r.error_trace[2] = qdp::kInf;
    const json j = qdp::io::oracle_to_json(r);
    const qdp::OracleResult back = qdp::io::oracle_from_json(j);
    CHECK(back.cap_exceeded());
    CHECK(back.error_trace.at(1) == r.error_trace.at(1));
    CHECK(std::isinf(back.error_trace.at(2)));
    CHECK(qdp::io::oracle_to_json(back).dump() == j.dump());
  }
  SUBCASE("divergence value") {
    const qdp::DivergenceValue v = qdp::integral_hellinger(rho, sigma, 0.5)
                                       .hellinger;
    const json j = qdp::io::divergence_to_json(v);
    const qdp::DivergenceValue back = qdp::io::divergence_from_json(j);
    CHECK(back.value == v.value);
    CHECK(back.abs_error_estimate == v.abs_error_estimate);
    CHECK(back.method == v.method);
  }
}

TEST_CASE("infinity encodes as a string") {
  CHECK(qdp::io::real_to_json(qdp::kInf) == json("inf"));
  CHECK(std::isinf(qdp::io::real_from_json(json("inf"))));
  CHECK(qdp::io::real_from_json(json(0.25)) == 0.25);
}
