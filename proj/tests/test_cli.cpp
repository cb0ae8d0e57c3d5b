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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// runs the built CLI, capturing stdout+stderr
RunResult run_cli(const std::string& args) {
  const std::string out_file = "/tmp/qdp_cli_out.txt";
  const std::string cmd =
      std::string(QDP_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

const char* kStateA = "/tmp/qdp_cli_a.json";
const char* kStateB = "/tmp/qdp_cli_b.json";
const char* kStateBad = "/tmp/qdp_cli_bad.json";

void write_fixtures() {
  std::ofstream(kStateA)
      << R"({"dim": 2, "matrix": [[[0.9,0],[0,0]],[[0,0],[0.1,0]]]})";
  std::ofstream(kStateB)
      << R"({"dim": 2, "matrix": [[[0.1,0],[0,0]],[[0,0],[0.9,0]]]})";
  std::ofstream(kStateBad)
      << R"({"dim": 2, "matrix": [[[0.49,0],[0,0]],[[0,0],[0.49,0]]]})";
}

}  // namespace

TEST_CASE("cli end to end") {
  write_fixtures();
  const std::string ab = std::string(kStateA) + " " + kStateB;

  SUBCASE("divergence values and exit code 0") {
    const RunResult e1 = run_cli("divergence " + ab + " --kind E_gamma --gamma 1");
    CHECK(e1.exit_code == 0);
    CHECK(e1.output.find("0.8") != std::string::npos);
    const RunResult fid = run_cli("divergence " + ab + " --kind fidelity");
    CHECK(fid.output.find("0.6") != std::string::npos);
    const RunResult h = run_cli(
        "divergence " + ab + " --kind H_alpha --alpha 0.5 --format json");
    const auto j = nlohmann::json::parse(h.output);
    CHECK(std::abs(j["value"].get<double>() - 0.8) < 1e-6);
  }

  SUBCASE("bad state file exits 2 with a named invariant") {
    const RunResult r =
        run_cli(std::string("divergence ") + kStateBad + " " + kStateB +
                " --kind fidelity");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("trace") != std::string::npos);
  }

  SUBCASE("unknown kind exits 2") {
    CHECK(run_cli("divergence " + ab + " --kind nope").exit_code == 2);
  }

  SUBCASE("bounds table contains the worked ceilings") {
    const RunResult r = run_cli("bounds " + ab +
                                " --p 0.5 --delta 0.1 --epsilon "
                                "1.0986122886681098");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("achv-upper-half") != std::string::npos);
    CHECK(r.output.find("21") != std::string::npos);
  }

  SUBCASE("oracle reports witness 9 and cap-exceeded rows exit 0") {
    const RunResult r = run_cli("oracle " + ab +
                                " --p 0.5 --delta 0.1 --epsilon "
                                "1.0986122886681098 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["ldp_witness"]["n_star"].get<long long>() == 9);
    const RunResult cap = run_cli(std::string("oracle ") + kStateA + " " +
                                  kStateA + " --p 0.5 --delta 0.1");
    CHECK(cap.exit_code == 0);
    CHECK(cap.output.find("CapExceeded") != std::string::npos);
  }

  SUBCASE("sweep emits the documented header and crossover") {
    const RunResult r =
        run_cli("sweep " + ab + " --p 0.5 --delta 0.1 --epsilon 0.2:3:0.2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("epsilon,lower_hellinger,lower_chi2,lower_js,"
                         "upper_achievability,upper_general,witness_n,"
                         "best_lower_tag",
                         0) == 0);
    CHECK(r.output.find("chi2") != std::string::npos);
    CHECK(r.output.find("hellinger") != std::string::npos);
  }

  SUBCASE("json report reloads bit for bit") {
    const std::string path = "/tmp/qdp_cli_report.json";
    const RunResult r = run_cli("bounds " + ab +
                                " --p 0.5 --delta 0.1 --epsilon 2 "
                                "--format json --out " +
                                path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const auto j = nlohmann::json::parse(ss.str());
    CHECK(j.dump(2) + "\n" == ss.str());
    std::remove(path.c_str());
  }

  SUBCASE("verify: tiny passing run, zero trials, injected failure") {
    const RunResult ok = run_cli("verify --trials 5 --seed 7");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("FAIL") == std::string::npos);

    const RunResult zero = run_cli("verify --trials 0");
    CHECK(zero.exit_code == 2);

    const RunResult broken = run_cli(
        "verify --trials 5 --seed 7 --inject-failure worked-ldp-anchor");
    CHECK(broken.exit_code == 1);
    CHECK(broken.output.find("worked-ldp-anchor") != std::string::npos);
    CHECK(broken.output.find("FAIL") != std::string::npos);
  }

  SUBCASE("channel verification from a file") {
    const char* kChannel = "/tmp/qdp_cli_channel.json";
    // the binary mechanism POVM at kappa = 3/4: eigenvalue ratio exactly 3
    std::ofstream(kChannel) << R"({"kind": "measurement", "ops": [
      [[[0.75,0],[0,0]],[[0,0],[0.25,0]]],
      [[[0.25,0],[0,0]],[[0,0],[0.75,0]]]]})";
    const RunResult pass = run_cli(std::string("channel-verify ") + kChannel +
                                   " --epsilon 1.0986122886681098");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output.find("PASS") != std::string::npos);
    const RunResult fail = run_cli(std::string("channel-verify ") + kChannel +
                                   " --epsilon 0.5");
    CHECK(fail.exit_code == 1);
    std::remove(kChannel);
  }

  SUBCASE("usage errors exit 2") {
    CHECK(run_cli("divergence only_one.json --kind fidelity").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
  }
}
