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

// JSON file formats.
//
// Operator:
//   {"version": 1, "convention": "real-N3D-ACN", "n_in": N, "n_out": M,
//    "matrix": [[...], ...]}        // (M+1)^2 rows of (N+1)^2 finite doubles
//
// Scene:
//   {"sources": [{"amplitude": a, "theta_rad": t, "phi_rad": p}, ...],
//    "snr_db": 0, "mu": 1}          // snr_db and mu optional

#ifndef SHVIZ_OPERATOR_IO_H_
#define SHVIZ_OPERATOR_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "shviz/operators.h"

namespace shviz {

inline constexpr int kOperatorFileVersion = 1;
inline constexpr char kOperatorConvention[] = "real-N3D-ACN";

// Serialized doubles round-trip bit-exactly.
std::string OperatorToJson(const ShOperator& op);

// Throws IoError on malformed JSON or wrong field types, DimensionError if the
// matrix shape disagrees with the declared orders.
ShOperator OperatorFromJson(std::string_view text);

void WriteOperatorFile(const ShOperator& op, const std::filesystem::path& path);
ShOperator ReadOperatorFile(const std::filesystem::path& path);

SourceScene SceneFromJson(std::string_view text);
std::string SceneToJson(const SourceScene& scene);
SourceScene ReadSceneFile(const std::filesystem::path& path);

}  // namespace shviz

#endif  // SHVIZ_OPERATOR_IO_H_
