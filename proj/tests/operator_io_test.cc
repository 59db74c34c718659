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


#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "oracles.h"
#include "shviz/error.h"
#include "shviz/operator_io.h"

namespace shviz {
namespace {

TEST(OperatorIoTest, BitExactRoundTrip) {
  oracle::Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    const int n_in = i % 4;
    const int n_out = (i + 2) % 5;
    Eigen::MatrixXd m = rng.NormalMatrix(NumCoeffs(n_out), NumCoeffs(n_in));
    m(0, 0) = 1e-300 * (i + 1);
    m(m.rows() - 1, 0) = -0.1;
    const ShOperator op(n_in, n_out, m);
    const ShOperator back = OperatorFromJson(OperatorToJson(op));
    EXPECT_EQ(back.n_in(), n_in);
    EXPECT_EQ(back.n_out(), n_out);
    EXPECT_EQ(back.matrix(), op.matrix());
  }
}

TEST(OperatorIoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "shviz_io_test.json";
  const ShOperator op(1, 1, Eigen::MatrixXd::Identity(4, 4) * 0.25);
  WriteOperatorFile(op, path);
  EXPECT_EQ(ReadOperatorFile(path).matrix(), op.matrix());
  std::filesystem::remove(path);
  EXPECT_THROW(ReadOperatorFile(path), IoError);
  EXPECT_THROW(WriteOperatorFile(op, "/nonexistent/dir/op.json"), IoError);
}

TEST(OperatorIoTest, RejectsShapeMismatch) {
  EXPECT_THROW(OperatorFromJson(R"({"version":1,"convention":"real-N3D-ACN","n_in":1,)"
                                R"("n_out":1,"matrix":[[1,0,0,0],[0,1,0,0],[0,0,1,0]]})"),
               DimensionError);
  EXPECT_THROW(OperatorFromJson(R"({"version":1,"convention":"real-N3D-ACN","n_in":1,)"
                                R"("n_out":0,"matrix":[[1,0,0]]})"),
               DimensionError);
}

TEST(OperatorIoTest, RejectsMalformedInput) {
  const char* cases[] = {
      "not json",
      "[]",
      R"({"convention":"real-N3D-ACN","n_in":0,"n_out":0,"matrix":[[1]]})",
      R"({"version":2,"convention":"real-N3D-ACN","n_in":0,"n_out":0,"matrix":[[1]]})",
      R"({"version":1,"convention":"complex","n_in":0,"n_out":0,"matrix":[[1]]})",
      R"({"version":1,"convention":"real-N3D-ACN","n_in":-1,"n_out":0,"matrix":[[1]]})",
      R"({"version":1,"convention":"real-N3D-ACN","n_in":0.5,"n_out":0,"matrix":[[1]]})",
      R"({"version":1,"convention":"real-N3D-ACN","n_in":0,"n_out":0,"matrix":[[null]]})",
      R"({"version":1,"convention":"real-N3D-ACN","n_in":0,"n_out":0,"matrix":[["1"]]})",
      R"({"version":1,"convention":"real-N3D-ACN","n_in":0,"n_out":0,"matrix":[1]})",
      R"({"version":1,"convention":"real-N3D-ACN","n_in":0,"n_out":0})",
      R"({"version":1,"convention":"real-N3D-ACN","n_in":26,"n_out":0,"matrix":[]})",
  };
  for (const char* text : cases) {
    EXPECT_THROW(OperatorFromJson(text), IoError) << text;
  }
}

TEST(OperatorIoTest, RejectsNonFiniteEntries) {
  // JSON has no literal for infinity; an overflowing literal is the only way
  // to smuggle one in.
  EXPECT_THROW(OperatorFromJson(R"({"version":1,"convention":"real-N3D-ACN","n_in":0,)"
                                R"("n_out":0,"matrix":[[1e999]]})"),
               IoError);
  EXPECT_THROW(OperatorFromJson(R"({"version":1,"convention":"real-N3D-ACN","n_in":0,)"
                                R"("n_out":0,"matrix":[[NaN]]})"),
               IoError);
}

TEST(SceneIoTest, RoundTripAndDefaults) {
  const SourceScene t = SourceScene::Table2();
  const SourceScene back = SceneFromJson(SceneToJson(t));
  ASSERT_EQ(back.sources.size(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back.sources[i].amplitude, t.sources[i].amplitude);
    EXPECT_EQ(back.sources[i].theta, t.sources[i].theta);
    EXPECT_EQ(back.sources[i].phi, t.sources[i].phi);
  }
  const SourceScene minimal =
      SceneFromJson(R"({"sources":[{"amplitude":1,"theta_rad":0.5,"phi_rad":1}]})");
  EXPECT_EQ(minimal.mu, 1.0);
  EXPECT_EQ(minimal.snr_db, 0.0);
}

TEST(SceneIoTest, RejectsInvalidScenes) {
  EXPECT_THROW(SceneFromJson(R"({"sources":[]})"), ParameterError);
  EXPECT_THROW(SceneFromJson(R"({"sources":[{"amplitude":1,"theta_rad":0}]})"), IoError);
  EXPECT_THROW(
      SceneFromJson(R"({"sources":[{"amplitude":1,"theta_rad":0,"phi_rad":0}],"mu":0})"),
      ParameterError);
  EXPECT_THROW(SceneFromJson("{}"), IoError);
}

}  // namespace
}  // namespace shviz
