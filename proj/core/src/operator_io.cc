// Copyright 2026 The shviz Authors
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

#include "shviz/operator_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "shviz/error.h"

namespace shviz {

namespace {

using nlohmann::json;

std::string ReadWholeFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteWholeFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

double FiniteNumber(const json& v, const char* what) {
  if (!v.is_number()) throw IoError(std::string(what) + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw IoError(std::string(what) + ": non-finite value");
  return d;
}

int NonNegativeInt(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() < 0) {
    throw IoError(std::string("operator file: '") + key +
                  "' must be a non-negative integer");
  }
  return j[key].get<int>();
}

}  // namespace

std::string OperatorToJson(const ShOperator& op) {
  json j;
  j["version"] = kOperatorFileVersion;
  j["convention"] = kOperatorConvention;
  j["n_in"] = op.n_in();
  j["n_out"] = op.n_out();
  json rows = json::array();
  for (Eigen::Index r = 0; r < op.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < op.matrix().cols(); ++c) {
      row.push_back(op.matrix()(r, c));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump() + "\n";
}

ShOperator OperatorFromJson(std::string_view text) {
  const json j = Parse(text);
  if (!j.is_object()) throw IoError("operator file: top level must be an object");
  if (!j.contains("version") || j["version"] != kOperatorFileVersion) {
    throw IoError("operator file: unsupported or missing version");
  }
  if (!j.contains("convention") || j["convention"] != kOperatorConvention) {
    throw IoError(std::string("operator file: convention must be \"") +
                  kOperatorConvention + "\"");
  }
  const int n_in = NonNegativeInt(j, "n_in");
  const int n_out = NonNegativeInt(j, "n_out");
  if (n_in > kMaxOrder || n_out > kMaxOrder) {
    throw IoError("operator file: order above " + std::to_string(kMaxOrder));
  }
  if (!j.contains("matrix") || !j["matrix"].is_array()) {
    throw IoError("operator file: 'matrix' must be an array of rows");
  }
  const json& rows = j["matrix"];
  const auto want_rows = static_cast<size_t>(NumCoeffs(n_out));
  const auto want_cols = static_cast<size_t>(NumCoeffs(n_in));
  if (rows.size() != want_rows) {
    throw DimensionError("operator file: " + std::to_string(rows.size()) +
                         " rows, expected (n_out+1)^2 = " +
                         std::to_string(want_rows));
  }
  Eigen::MatrixXd m(want_rows, want_cols);
  for (size_t r = 0; r < want_rows; ++r) {
    if (!rows[r].is_array()) throw IoError("operator file: row is not an array");
    if (rows[r].size() != want_cols) {
      throw DimensionError("operator file: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) +
                           " entries, expected (n_in+1)^2 = " +
                           std::to_string(want_cols));
    }
    for (size_t c = 0; c < want_cols; ++c) {
      m(r, c) = FiniteNumber(rows[r][c], "operator file: matrix entry");
    }
  }
  return ShOperator(n_in, n_out, std::move(m));
}

void WriteOperatorFile(const ShOperator& op, const std::filesystem::path& path) {
  WriteWholeFile(path, OperatorToJson(op));
}

ShOperator ReadOperatorFile(const std::filesystem::path& path) {
  return OperatorFromJson(ReadWholeFile(path));
}

SourceScene SceneFromJson(std::string_view text) {
  const json j = Parse(text);
  if (!j.is_object() || !j.contains("sources") || !j["sources"].is_array()) {
    throw IoError("scene file: expected an object with a 'sources' array");
  }
  SourceScene scene;
  for (const json& s : j["sources"]) {
    if (!s.is_object() || !s.contains("amplitude") || !s.contains("theta_rad") ||
        !s.contains("phi_rad")) {
      throw IoError("scene file: each source needs amplitude, theta_rad, phi_rad");
    }
    scene.sources.push_back({FiniteNumber(s["amplitude"], "amplitude"),
                             FiniteNumber(s["theta_rad"], "theta_rad"),
                             FiniteNumber(s["phi_rad"], "phi_rad")});
  }
  if (j.contains("snr_db")) scene.snr_db = FiniteNumber(j["snr_db"], "snr_db");
  if (j.contains("mu")) scene.mu = FiniteNumber(j["mu"], "mu");
  scene.Validate();
  return scene;
}

std::string SceneToJson(const SourceScene& scene) {
  json j;
  json sources = json::array();
  for (const Source& s : scene.sources) {
    sources.push_back(
        {{"amplitude", s.amplitude}, {"theta_rad", s.theta}, {"phi_rad", s.phi}});
  }
  j["sources"] = std::move(sources);
  j["snr_db"] = scene.snr_db;
  j["mu"] = scene.mu;
  return j.dump(1) + "\n";
}

SourceScene ReadSceneFile(const std::filesystem::path& path) {
  return SceneFromJson(ReadWholeFile(path));
}

}  // namespace shviz
