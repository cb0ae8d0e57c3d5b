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

#ifndef QDP_IO_HPP_
#define QDP_IO_HPP_

#include <string>

#include <json.hpp>

#include "qdp/bounds.hpp"
#include "qdp/ldp.hpp"
#include "qdp/oracle.hpp"

namespace qdp::io {

using nlohmann::json;

// State files: {"dim": d, "matrix": [[[re, im], ...], ...]}.
DensityMatrix load_state(const std::string& path);
DensityMatrix state_from_json(const json& j);
json state_to_json(const DensityMatrix& rho);
void save_state(const std::string& path, const DensityMatrix& rho);

// Channel files: {"kind": "kraus"|"measurement", "ops": [matrix, ...]} with
// the same complex-entry encoding; Kraus matrices may be rectangular.
Channel load_channel(const std::string& path);
Channel channel_from_json(const json& j);
json channel_to_json(const Channel& ch);

// Infinity encodes as the string "inf" so reports survive a JSON round trip.
json real_to_json(double v);
double real_from_json(const json& j);

json divergence_to_json(const DivergenceValue& v);
DivergenceValue divergence_from_json(const json& j);

json certificate_to_json(const BoundsCertificate& cert);
BoundsCertificate certificate_from_json(const json& j);

json oracle_to_json(const OracleResult& result);
OracleResult oracle_from_json(const json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
json parse_json_file(const std::string& path);

}  // namespace qdp::io

#endif  // QDP_IO_HPP_
