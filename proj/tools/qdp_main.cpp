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

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdp/io.hpp"
#include "qdp/parallel.hpp"
#include "qdp/sweep.hpp"
#include "qdp/verification.hpp"

namespace {

using qdp::io::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt_real(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    qdp::io::write_file(out_path, text);
}

std::vector<double> parse_eps_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double start = 0.0, stop = 0.0, step = 0.0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        step <= 0.0)
      throw qdp::Error(qdp::ErrorKind::kParseError,
                       "epsilon range must be start:stop:step with step > 0");
    for (int i = 0;; ++i) {
      const double e = start + i * step;
      if (e > stop + 1e-12) break;
      grid.push_back(e);
    }
    return grid;
  }
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    grid.push_back(std::stod(spec.substr(pos, next - pos)));
    pos = next + 1;
  }
  return grid;
}

struct DivergenceArgs {
  std::string state_a, state_b, kind, format = "table", out;
  double gamma = 1.0;
  double alpha = 0.5;
  double p = 0.5;
};

int run_divergence(const DivergenceArgs& args) {
  const qdp::DensityMatrix rho = qdp::io::load_state(args.state_a);
  const qdp::DensityMatrix sigma = qdp::io::load_state(args.state_b);
  json params = json::object();
  qdp::DivergenceValue value;
  if (args.kind == "E_gamma") {
    value = qdp::hockey_stick(rho, sigma, args.gamma);
    params["gamma"] = args.gamma;
  } else if (args.kind == "fidelity") {
    value = qdp::fidelity(rho, sigma);
  } else if (args.kind == "bures") {
    value = {qdp::bures_distance(rho, sigma), 0.0, qdp::Method::kClosedForm};
  } else if (args.kind == "D_max") {
    value = qdp::max_relative_entropy(rho, sigma);
  } else if (args.kind == "petz") {
    const qdp::PetzQuantities q = qdp::petz_quantities(rho, sigma, args.alpha);
    value = {q.d_bar, 0.0, qdp::Method::kClosedForm};
    params["alpha"] = args.alpha;
    params["q_bar"] = qdp::io::real_to_json(q.q_bar);
    params["h_bar"] = qdp::io::real_to_json(q.h_bar);
  } else if (args.kind == "sandwiched") {
    value = qdp::sandwiched_renyi(rho, sigma, args.alpha);
    params["alpha"] = args.alpha;
  } else if (args.kind == "H_alpha" || args.kind == "D_alpha") {
    const qdp::HellingerRenyi hr = qdp::integral_hellinger(rho, sigma, args.alpha);
    value = args.kind == "H_alpha" ? hr.hellinger : hr.renyi;
    params["alpha"] = args.alpha;
  } else if (args.kind == "chi2") {
    value = qdp::chi_squared(rho, sigma);
  } else if (args.kind == "relative_entropy") {
    value = qdp::relative_entropy(rho, sigma);
  } else if (args.kind == "js") {
    value = qdp::jensen_shannon(rho, sigma, args.p);
    params["p"] = args.p;
  } else {
    throw qdp::Error(qdp::ErrorKind::kParseError,
                     "unknown divergence kind: " + args.kind);
  }

  if (args.format == "json") {
    json report = qdp::io::divergence_to_json(value);
    report["kind"] = args.kind;
    report["params"] = params;
    emit(report.dump(2) + "\n", args.out);
  } else {
    std::string text = args.kind + " = " + fmt_real(value.value) +
                       "  (abs error est " + fmt_real(value.abs_error_estimate) +
                       ", " +
                       (value.method == qdp::Method::kClosedForm ? "closed form"
                                                                 : "quadrature") +
                       ")\n";
    emit(text, args.out);
  }
  return kExitOk;
}

std::string certificate_table(const qdp::BoundsCertificate& cert) {
  std::string text;
  char line[160];
  std::snprintf(line, sizeof(line), "p=%g delta=%g", cert.p, cert.delta);
  text += line;
  if (cert.epsilon) {
    std::snprintf(line, sizeof(line), " epsilon=%g", *cert.epsilon);
    text += line;
  }
  if (cert.degenerate_privacy) text += "  [degenerate privacy regime]";
  text += "\n";
  std::snprintf(line, sizeof(line), "%-24s %-6s %-14s %-8s %-6s %s\n", "name",
                "side", "raw", "ceiling", "valid", "note");
  text += line;
  for (const qdp::BoundEntry& e : cert.entries) {
    const std::string ceiling =
        e.ceiling ? std::to_string(*e.ceiling) : std::string("-");
    std::string note = e.note;
    if (e.up_to_universal_constant)
      note = note.empty() ? "up to universal constant"
                          : note + "; up to universal constant";
    std::snprintf(line, sizeof(line), "%-24s %-6s %-14s %-8s %-6s %s\n",
                  e.name.c_str(), e.side == qdp::BoundSide::kLower ? "lower" : "upper",
                  fmt_real(e.raw).c_str(), ceiling.c_str(),
                  e.assumptions_met ? "yes" : "no", note.c_str());
    text += line;
  }
  return text;
}

std::string oracle_table(const qdp::OracleResult& result) {
  std::string text = result.n_star
                         ? "n* = " + std::to_string(*result.n_star) + "\n"
                         : "n* = CapExceeded(n_cap=" +
                               std::to_string(result.n_cap) + ")\n";
  text += "error trace:\n";
  for (const auto& [n, err] : result.error_trace)
    text += "  n=" + std::to_string(n) + "  error=" + fmt_real(err) + "\n";
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum state discrimination under local differential privacy"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads (0 = all cores, 1 = serial)");

  DivergenceArgs div_args;
  CLI::App* div = app.add_subcommand("divergence", "evaluate one divergence");
  div->add_option("state_a", div_args.state_a)->required();
  div->add_option("state_b", div_args.state_b)->required();
  div->add_option("--kind", div_args.kind,
                  "E_gamma|fidelity|bures|D_max|petz|sandwiched|H_alpha|"
                  "D_alpha|chi2|relative_entropy|js")
      ->required();
  div->add_option("--gamma", div_args.gamma);
  div->add_option("--alpha", div_args.alpha);
  div->add_option("--p", div_args.p);
  div->add_option("--format", div_args.format)
      ->check(CLI::IsMember({"table", "json"}));
  div->add_option("--out", div_args.out);

  struct {
    std::string state_a, state_b, format = "table", out;
    double p = 0.5, delta = 0.1;
    std::optional<double> epsilon;
  } bounds_args;
  CLI::App* bounds = app.add_subcommand("bounds", "sample-complexity certificate");
  bounds->add_option("state_a", bounds_args.state_a)->required();
  bounds->add_option("state_b", bounds_args.state_b)->required();
  bounds->add_option("--p", bounds_args.p);
  bounds->add_option("--delta", bounds_args.delta);
  bounds->add_option("--epsilon", bounds_args.epsilon);
  bounds->add_option("--format", bounds_args.format)
      ->check(CLI::IsMember({"table", "json"}));
  bounds->add_option("--out", bounds_args.out);

  struct {
    std::string state_a, state_b, format = "table", out;
    double p = 0.5, delta = 0.1;
    std::optional<double> epsilon, alpha, beta;
    long long n_max = 1000000;
  } oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "exact small-instance n*");
  oracle->add_option("state_a", oracle_args.state_a)->required();
  oracle->add_option("state_b", oracle_args.state_b)->required();
  oracle->add_option("--p", oracle_args.p);
  oracle->add_option("--delta", oracle_args.delta);
  oracle->add_option("--epsilon", oracle_args.epsilon,
                     "also run the binary-mechanism witness at this epsilon");
  oracle->add_option("--alpha", oracle_args.alpha,
                     "type-I level for the asymmetric scan");
  oracle->add_option("--beta", oracle_args.beta,
                     "type-II level for the asymmetric scan");
  oracle->add_option("--n-max", oracle_args.n_max);
  oracle->add_option("--format", oracle_args.format)
      ->check(CLI::IsMember({"table", "json"}));
  oracle->add_option("--out", oracle_args.out);

  struct {
    std::uint64_t seed = 20260809;
    long long trials = 1000;
    std::string inject;
  } verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suite");
  verify_cmd->add_option("--seed", verify_args.seed);
  verify_cmd->add_option("--trials", verify_args.trials,
                         "cases for the largest check (1000 = full suite)");
  verify_cmd->add_option("--inject-failure", verify_args.inject)
      ->group("");  // hidden: harness self-test

  struct {
    std::string channel, format = "table", out;
    double epsilon = 1.0;
    long long samples = 200;
    std::uint64_t seed = 1;
  } chv_args;
  CLI::App* chv = app.add_subcommand(
      "channel-verify", "test a channel file against an LDP level");
  chv->add_option("channel", chv_args.channel)->required();
  chv->add_option("--epsilon", chv_args.epsilon)->required();
  chv->add_option("--samples", chv_args.samples,
                  "pure-state pairs for Kraus channels (sampled check)");
  chv->add_option("--seed", chv_args.seed);
  chv->add_option("--format", chv_args.format)
      ->check(CLI::IsMember({"table", "json"}));
  chv->add_option("--out", chv_args.out);

  struct {
    std::string state_a, state_b, eps_spec, out, format = "csv";
    double p = 0.5, delta = 0.1;
    long long n_max = 1000000;
  } sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "epsilon sweep as CSV");
  sweep_cmd->add_option("state_a", sweep_args.state_a)->required();
  sweep_cmd->add_option("state_b", sweep_args.state_b)->required();
  sweep_cmd->add_option("--epsilon", sweep_args.eps_spec,
                        "grid: start:stop:step or comma list")
      ->required();
  sweep_cmd->add_option("--p", sweep_args.p);
  sweep_cmd->add_option("--delta", sweep_args.delta);
  sweep_cmd->add_option("--n-max", sweep_args.n_max);
  sweep_cmd->add_option("--format", sweep_args.format)
      ->check(CLI::IsMember({"csv"}));
  sweep_cmd->add_option("--out", sweep_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  qdp::par::set_threads(threads);

  try {
    if (div->parsed()) return run_divergence(div_args);

    if (bounds->parsed()) {
      const qdp::DensityMatrix rho = qdp::io::load_state(bounds_args.state_a);
      const qdp::DensityMatrix sigma = qdp::io::load_state(bounds_args.state_b);
      qdp::BoundsCertificate cert;
      if (bounds_args.epsilon) {
        cert = qdp::ldp_sc_bounds(rho, sigma, bounds_args.p, bounds_args.delta,
                                  *bounds_args.epsilon);
      } else {
        cert = qdp::fidelity_sc_bounds(rho, sigma, bounds_args.p,
                                       bounds_args.delta);
        const qdp::BoundsCertificate prior = qdp::prior_sc_bounds(
            rho, sigma, bounds_args.p, bounds_args.delta);
        cert.entries.insert(cert.entries.end(), prior.entries.begin(),
                            prior.entries.end());
      }
      if (bounds_args.format == "json")
        emit(qdp::io::certificate_to_json(cert).dump(2) + "\n", bounds_args.out);
      else
        emit(certificate_table(cert), bounds_args.out);
      return kExitOk;
    }

    if (oracle->parsed()) {
      const qdp::DensityMatrix rho = qdp::io::load_state(oracle_args.state_a);
      const qdp::DensityMatrix sigma = qdp::io::load_state(oracle_args.state_b);
      json report = json::object();
      std::string text;
      if (oracle_args.alpha && oracle_args.beta) {
        const qdp::OracleResult pf = qdp::neyman_pearson_scan(
            rho, sigma, *oracle_args.alpha, *oracle_args.beta,
            oracle_args.n_max);
        report["asymmetric"] = qdp::io::oracle_to_json(pf);
        text += "asymmetric scan:\n" + oracle_table(pf);
      } else {
        const qdp::OracleResult bayes = qdp::quantum_sample_complexity(
            rho, sigma, oracle_args.p, oracle_args.delta, oracle_args.n_max);
        report["bayes"] = qdp::io::oracle_to_json(bayes);
        text += "Bayes oracle:\n" + oracle_table(bayes);
        if (oracle_args.epsilon) {
          const qdp::OracleResult witness =
              qdp::ldp_witness(rho, sigma, oracle_args.p, oracle_args.delta,
                               *oracle_args.epsilon, oracle_args.n_max);
          report["ldp_witness"] = qdp::io::oracle_to_json(witness);
          text += "LDP witness:\n" + oracle_table(witness);
        }
      }
      if (oracle_args.format == "json")
        emit(report.dump(2) + "\n", oracle_args.out);
      else
        emit(text, oracle_args.out);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (verify_args.trials <= 0) {
        std::cerr << "error: --trials must be positive\n";
        return kExitUsage;
      }
      qdp::verify::VerifyOptions opts;
      opts.seed = verify_args.seed;
      opts.scale = static_cast<double>(verify_args.trials) / 1000.0;
      opts.inject_failure = verify_args.inject;
      bool all_passed = true;
      for (const std::string& name : qdp::verify::check_names()) {
        const qdp::verify::CheckResult result = qdp::verify::run_check(name, opts);
        all_passed = all_passed && result.passed;
        std::printf("%-28s %s  cases=%lld  worst_slack=%s%s%s\n", name.c_str(),
                    result.passed ? "PASS" : "FAIL", result.cases,
                    fmt_real(result.worst_slack).c_str(),
                    result.detail.empty() ? "" : "  ",
                    result.detail.c_str());
      }
      return all_passed ? kExitOk : kExitCheckFailure;
    }

    if (chv->parsed()) {
      const qdp::Channel ch = qdp::io::load_channel(chv_args.channel);
      const qdp::LdpReport report =
          qdp::verify_ldp(ch, chv_args.epsilon, chv_args.samples, chv_args.seed);
      if (chv_args.format == "json") {
        json j{{"epsilon_tested", report.epsilon_tested},
               {"margin", report.margin},
               {"method", report.method == qdp::LdpMethod::kExactPovm
                              ? "exact_povm"
                              : "sampled_pure"},
               {"samples", report.samples},
               {"passes", report.passes()}};
        emit(j.dump(2) + "\n", chv_args.out);
      } else {
        char line[192];
        std::snprintf(line, sizeof(line),
                      "epsilon=%g margin=%s method=%s samples=%ld -> %s\n",
                      report.epsilon_tested, fmt_real(report.margin).c_str(),
                      report.method == qdp::LdpMethod::kExactPovm
                          ? "exact_povm"
                          : "sampled_pure (non-exhaustive)",
                      report.samples, report.passes() ? "PASS" : "FAIL");
        emit(line, chv_args.out);
      }
      return report.passes() ? kExitOk : kExitCheckFailure;
    }

    if (sweep_cmd->parsed()) {
      const qdp::DensityMatrix rho = qdp::io::load_state(sweep_args.state_a);
      const qdp::DensityMatrix sigma = qdp::io::load_state(sweep_args.state_b);
      const std::vector<double> grid = parse_eps_grid(sweep_args.eps_spec);
      const std::vector<qdp::SweepRow> rows = qdp::compute_sweep(
          rho, sigma, sweep_args.p, sweep_args.delta, grid, sweep_args.n_max);
      emit(qdp::sweep_csv(rows), sweep_args.out);
      return kExitOk;
    }
  } catch (const qdp::Error& e) {
    std::cerr << "error [" << qdp::error_kind_name(e.kind()) << "]: " << e.what()
              << "\n";
    switch (e.kind()) {
      case qdp::ErrorKind::kNoConvergence:
      case qdp::ErrorKind::kQuadratureFailure:
      case qdp::ErrorKind::kSingularInput:
        return kExitCheckFailure;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
