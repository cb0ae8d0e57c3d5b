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

#include "qdp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qdp::io {

namespace {

Matrix matrix_from_json(const json& rows, std::size_t expect_rows,
                        std::size_t expect_cols, const std::string& what) {
  if (!rows.is_array() || rows.empty())
    throw Error(ErrorKind::kParseError, what + ": matrix must be a nonempty array");
  const std::size_t r = expect_rows > 0 ? expect_rows : rows.size();
  if (rows.size() != r)
    throw Error(ErrorKind::kParseError,
                what + ": expected " + std::to_string(r) + " rows, found " +
                    std::to_string(rows.size()));
  std::size_t c = expect_cols;
  Matrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array())
      throw Error(ErrorKind::kParseError,
                  what + ": row " + std::to_string(i) + " is not an array");
    if (c == 0) {
      c = row.size();
      m = Matrix(r, c);
    }
    if (row.size() != c)
      throw Error(ErrorKind::kParseError,
                  what + ": row " + std::to_string(i) + " has length " +
                      std::to_string(row.size()) + ", expected " +
                      std::to_string(c));
    if (m.rows() == 0) m = Matrix(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      const json& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number())
        throw Error(ErrorKind::kParseError,
                    what + ": entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") must be a [re, im] pair");
      m(i, j) = cplx(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::kParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::kParseError, "cannot write " + path);
  out << contents;
}

json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParseError, path + ": " + e.what());
  }
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrix"))
    throw Error(ErrorKind::kParseError,
                "state file must be an object with 'dim' and 'matrix'");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw Error(ErrorKind::kParseError, "'dim' must be a positive integer");
  const std::size_t d = j["dim"].get<std::size_t>();
  const Matrix m = matrix_from_json(j["matrix"], d, d, "state");
  return DensityMatrix(m);  // throws ValidationError naming the invariant
}

DensityMatrix load_state(const std::string& path) {
  return state_from_json(parse_json_file(path));
}

json state_to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"matrix", matrix_to_json(rho.matrix())}};
}

void save_state(const std::string& path, const DensityMatrix& rho) {
  write_file(path, state_to_json(rho).dump(2) + "\n");
}

Channel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("ops"))
    throw Error(ErrorKind::kParseError,
                "channel file must be an object with 'kind' and 'ops'");
  const std::string kind = j["kind"].get<std::string>();
  if (!j["ops"].is_array() || j["ops"].empty())
    throw Error(ErrorKind::kParseError, "'ops' must be a nonempty array");
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < j["ops"].size(); ++i)
    ops.push_back(matrix_from_json(j["ops"][i], 0, 0,
                                   "op " + std::to_string(i)));
  if (kind == "kraus") return Channel::kraus(std::move(ops));
  if (kind == "measurement") return Channel::measurement(std::move(ops));
  throw Error(ErrorKind::kParseError,
              "'kind' must be \"kraus\" or \"measurement\"");
}

Channel load_channel(const std::string& path) {
  return channel_from_json(parse_json_file(path));
}

json channel_to_json(const Channel& ch) {
  json ops = json::array();
  for (const Matrix& m : ch.ops()) ops.push_back(matrix_to_json(m));
  return json{
      {"kind", ch.kind() == ChannelKind::kKraus ? "kraus" : "measurement"},
      {"ops", std::move(ops)}};
}

json real_to_json(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}

double real_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw Error(ErrorKind::kParseError, "expected number or \"inf\"");
  }
  return j.get<double>();
}

json divergence_to_json(const DivergenceValue& v) {
  return json{{"value", real_to_json(v.value)},
              {"abs_error_estimate", v.abs_error_estimate},
              {"method",
               v.method == Method::kClosedForm ? "closed_form" : "quadrature"}};
}

DivergenceValue divergence_from_json(const json& j) {
  DivergenceValue v;
  v.value = real_from_json(j.at("value"));
  v.abs_error_estimate = j.at("abs_error_estimate").get<double>();
  v.method = j.at("method").get<std::string>() == "closed_form"
                 ? Method::kClosedForm
                 : Method::kQuadrature;
  return v;
}

json certificate_to_json(const BoundsCertificate& cert) {
  json entries = json::array();
  for (const BoundEntry& e : cert.entries) {
    json je{{"name", e.name},
            {"side", e.side == BoundSide::kLower ? "lower" : "upper"},
            {"raw", real_to_json(e.raw)},
            {"assumptions_met", e.assumptions_met},
            {"up_to_universal_constant", e.up_to_universal_constant},
            {"note", e.note}};
    je["ceiling"] = e.ceiling.has_value() ? json(*e.ceiling) : json(nullptr);
    entries.push_back(std::move(je));
  }
  json out{{"p", cert.p},
           {"delta", cert.delta},
           {"degenerate_privacy", cert.degenerate_privacy},
           {"entries", std::move(entries)}};
  out["epsilon"] = cert.epsilon.has_value() ? json(*cert.epsilon) : json(nullptr);
  return out;
}

BoundsCertificate certificate_from_json(const json& j) {
  BoundsCertificate cert;
  cert.p = j.at("p").get<double>();
  cert.delta = j.at("delta").get<double>();
  if (!j.at("epsilon").is_null()) cert.epsilon = j.at("epsilon").get<double>();
  cert.degenerate_privacy = j.at("degenerate_privacy").get<bool>();
  for (const json& je : j.at("entries")) {
    BoundEntry e;
    e.name = je.at("name").get<std::string>();
    e.side = je.at("side").get<std::string>() == "lower" ? BoundSide::kLower
                                                         : BoundSide::kUpper;
    e.raw = real_from_json(je.at("raw"));
    if (!je.at("ceiling").is_null())
      e.ceiling = je.at("ceiling").get<long long>();
    e.assumptions_met = je.at("assumptions_met").get<bool>();
    e.up_to_universal_constant = je.at("up_to_universal_constant").get<bool>();
    e.note = je.at("note").get<std::string>();
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

json oracle_to_json(const OracleResult& result) {
  json trace = json::array();
  for (const auto& [n, err] : result.error_trace)
    trace.push_back({n, real_to_json(err)});
  const char* method = result.method == OracleMethod::kTensorEig
                           ? "tensor_eig"
                           : result.method == OracleMethod::kBinomialScan
                                 ? "binomial_scan"
                                 : "neyman_pearson_scan";
  json out{{"method", method},
           {"n_cap", result.n_cap},
           {"error_trace", std::move(trace)}};
  out["n_star"] =
      result.n_star.has_value() ? json(*result.n_star) : json("cap_exceeded");
  return out;
}

OracleResult oracle_from_json(const json& j) {
  OracleResult result;
  const std::string method = j.at("method").get<std::string>();
  result.method = method == "tensor_eig" ? OracleMethod::kTensorEig
                  : method == "binomial_scan" ? OracleMethod::kBinomialScan
                                              : OracleMethod::kNeymanPearsonScan;
  result.n_cap = j.at("n_cap").get<long long>();
  if (!j.at("n_star").is_string())
    result.n_star = j.at("n_star").get<long long>();
  for (const json& row : j.at("error_trace"))
    result.error_trace[row[0].get<long long>()] = real_from_json(row[1]);
  return result;
}

}  // namespace qdp::io
