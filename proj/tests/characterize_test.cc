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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.h"
#include "shviz/characterize.h"
#include "shviz/error.h"
#include "shviz/operators.h"
#include "shviz/sphere_grid.h"

namespace shviz {
namespace {

ShOperator RandomOp(oracle::Rng& rng, int n_in, int n_out) {
  return ShOperator(n_in, n_out, rng.NormalMatrix(NumCoeffs(n_out), NumCoeffs(n_in)));
}

TEST(ResponseTest, IdentityAndZero) {
  const Direction s = Direction::FromSpherical(0.4, 2.0);
  EXPECT_EQ(Response(IdentityOp(3), s).coeffs(), DiracExcitation(s, 3).coeffs());
  EXPECT_NEAR(Response(IdentityOp(3), s).norm(), 1.0, 1e-12);
  EXPECT_EQ(Response(ShOperator(3, 2, Eigen::MatrixXd::Zero(9, 16)), s).norm(), 0.0);
  EXPECT_EQ(Response(ShOperator(3, 2, Eigen::MatrixXd::Zero(9, 16)), s).order(), 2);
}

TEST(GainTest, IdentityScaledAndHomogeneous) {
  oracle::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const Direction s = Direction::FromCartesian(rng.UnitVector());
    EXPECT_NEAR(DirectionalGain(IdentityOp(4), s), 1.0, 1e-12);
    EXPECT_NEAR(DirectionalGain(IdentityOp(4).Scaled(-2.5), s), 2.5, 1e-12);
    const ShOperator t = RandomOp(rng, 3, 4);
    const double c = rng.Uniform(-3.0, 3.0);
    EXPECT_NEAR(DirectionalGain(t.Scaled(c), s), std::abs(c) * DirectionalGain(t, s),
                1e-12 * (1 + DirectionalGain(t, s)));
  }
}

TEST(GainTest, IdentityPlusMirrorIsConstant) {
  const double expected = 2.0 * std::sqrt(15.0 / 25.0);
  EXPECT_NEAR(expected, 1.5492, 1e-4);
  oracle::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    EXPECT_NEAR(DirectionalGain(IdentityPlusMirrorOp(4), Direction::FromCartesian(rng.UnitVector())),
                expected, 1e-12);
  }
}

TEST(EnergyVectorTest, IdentityPointsAtExcitation) {
  oracle::Rng rng(53);
  for (int order = 1; order <= 10; ++order) {
    const SphereGrid quad = DefaultQuadratureGrid(order);
    for (int i = 0; i < 10; ++i) {
      const Direction s = Direction::FromCartesian(rng.UnitVector());
      const Eigen::Vector3d re = EnergyVector(IdentityOp(order), s, quad);
      EXPECT_NEAR(re.norm(), order / (order + 1.0), 1e-10);
      EXPECT_LT((re.normalized() - s.vec()).norm(), 1e-10);
    }
  }
  const Eigen::Vector3d re = EnergyVector(IdentityOp(4), Direction(), DefaultQuadratureGrid(4));
  EXPECT_NEAR(re.norm(), 0.800, 1e-12);
}

TEST(EnergyVectorTest, IdentityPlusMirrorVanishes) {
  oracle::Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    const Direction s = Direction::FromCartesian(rng.UnitVector());
    EXPECT_LT(EnergyVector(IdentityPlusMirrorOp(4), s, DefaultQuadratureGrid(4)).norm(), 1e-10);
  }
}

TEST(EnergyVectorTest, ZeroResponseGivesZeroVector) {
  const ShOperator zero(2, 2, Eigen::MatrixXd::Zero(9, 9));
  EXPECT_EQ(EnergyVector(zero, Direction(), DefaultQuadratureGrid(2)), Eigen::Vector3d::Zero());
}

TEST(EnergyVectorTest, FigureRotation) {
  const Rotation3 r = Rotation3::FromAxisAngle(Eigen::Vector3d(1, 1, 1), kPi / 3.0);
  const ShOperator t = RotationOp(r, 4);
  const SphereGrid display = DisplayGrid();
  for (int q = 0; q < display.size(); ++q) {
    const Eigen::Vector3d re = EnergyVector(t, display.point(q), DefaultQuadratureGrid(4));
    EXPECT_LT((re - 0.8 * (r * display.point(q)).vec()).norm(), 1e-9);
  }
}

TEST(EnergyVectorTest, BoundOverRandomOperators) {
  oracle::Rng rng(55);
  for (int i = 0; i < 200; ++i) {
    const int order = 1 + i % 6;
    const ShOperator t = RandomOp(rng, order, order);
    const SphereGrid quad = DefaultQuadratureGrid(order);
    const double bound = ReMax(order) + 1e-9;
    for (int k = 0; k < 50; ++k) {
      const Direction s = Direction::FromCartesian(rng.UnitVector());
      ASSERT_LE(EnergyVector(t, s, quad).norm(), bound) << "op " << i << " order " << order;
    }
  }
}

TEST(EnergyVectorTest, BoundIsAttained) {
  // The bound is reached by the max-rE weighting: order-n coefficient
  // proportional to P_n(root) with root the largest zero of P_{N+1}.
  for (int order = 1; order <= 6; ++order) {
    const double root = ReMax(order);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(NumCoeffs(order), NumCoeffs(order));
    for (int i = 0; i < w.rows(); ++i) w(i, i) = oracle::Legendre(AcnOrder(i), root);
    const Eigen::Vector3d re =
        EnergyVector(ShOperator(order, order, w), Direction(), DefaultQuadratureGrid(order));
    EXPECT_NEAR(re.norm(), root, 1e-10);
  }
}

TEST(EnergyVectorTest, RotationEquivariance) {
  oracle::Rng rng(56);
  for (int i = 0; i < 20; ++i) {
    const int order = 1 + i % 5;
    const ShOperator t = RandomOp(rng, order, order);
    const Rotation3 r = Rotation3::FromMatrix(rng.Rotation());
    const ShOperator rt = RotationOp(r, order) * t;
    const SphereGrid quad = DefaultQuadratureGrid(order);
    for (int k = 0; k < 10; ++k) {
      const Direction s = Direction::FromCartesian(rng.UnitVector());
      EXPECT_LT((EnergyVector(rt, s, quad) - r.matrix() * EnergyVector(t, s, quad)).norm(), 1e-8);
    }
  }
}

TEST(EnergyVectorTest, IndependentOfValidQuadratureGrid) {
  oracle::Rng rng(57);
  for (int order = 1; order <= 6; ++order) {
    const ShOperator t = RandomOp(rng, order, order);
    const SphereGrid a = DefaultQuadratureGrid(order);
    const SphereGrid b = GaussProductGrid(order + 3);
    for (int k = 0; k < 10; ++k) {
      const Direction s = Direction::FromCartesian(rng.UnitVector());
      EXPECT_LT((EnergyVector(t, s, a) - EnergyVector(t, s, b)).norm(), 1e-10);
    }
  }
}

TEST(EnergyVectorTest, RejectsCoarseQuadrature) {
  EXPECT_THROW(EnergyVector(IdentityOp(4), Direction(), BuiltinTDesign(8)), PreconditionError);
  EXPECT_NO_THROW(EnergyVector(IdentityOp(4), Direction(), BuiltinTDesign(10)));
  EXPECT_THROW(DefaultQuadratureGrid(11), UnsupportedDegreeError);
}

TEST(ReMaxTest, Examples) {
  EXPECT_EQ(ReMax(0), 0.0);
  EXPECT_NEAR(ReMax(1), 0.577, 5e-4);
  EXPECT_NEAR(ReMax(4), 0.906, 5e-4);
  EXPECT_THROW(ReMax(-1), DomainError);
}

TEST(ReconstructTest, RandomOperatorsRoundTrip) {
  oracle::Rng rng(58);
  for (int order = 0; order <= 6; ++order) {
    const SphereGrid grid = BuiltinTDesign(2 * order);
    for (int i = 0; i < 5; ++i) {
      const ShOperator t = RandomOp(rng, order, order + i % 2);
      const ShOperator back = ReconstructOperator(ResponseMatrix(t, grid), grid, order);
      EXPECT_EQ(back.n_out(), t.n_out());
      EXPECT_LT((back.matrix() - t.matrix()).norm(), 1e-10 * t.matrix().norm());
    }
  }
}

TEST(ReconstructTest, IdentityAndRankDeficient) {
  const SphereGrid grid = BuiltinTDesign(8);
  EXPECT_LT((ReconstructOperator(ResponseMatrix(IdentityOp(4), grid), grid, 4).matrix() -
             Eigen::MatrixXd::Identity(25, 25)).norm(),
            1e-12);
  oracle::Rng rng(59);
  const Eigen::MatrixXd low = rng.NormalMatrix(25, 2) * rng.NormalMatrix(2, 25);
  const ShOperator t(4, 4, low);
  EXPECT_LT((ReconstructOperator(ResponseMatrix(t, grid), grid, 4).matrix() - low).norm(),
            1e-10 * low.norm());
}

TEST(ReconstructTest, Errors) {
  const SphereGrid grid = BuiltinTDesign(6);
  EXPECT_THROW(ReconstructOperator(Eigen::MatrixXd::Zero(25, grid.size()), grid, 4),
               PreconditionError);
  EXPECT_THROW(ReconstructOperator(Eigen::MatrixXd::Zero(9, grid.size() - 1), grid, 2),
               DimensionError);
  EXPECT_THROW(ReconstructOperator(Eigen::MatrixXd::Zero(8, grid.size()), grid, 2),
               DimensionError);
}

TEST(FieldTest, IdentityIsUniform) {
  const ResponseField f =
      CharacterizeField(IdentityOp(4), DisplayGrid(), EquirectRaster(6.0), DefaultQuadratureGrid(4));
  EXPECT_EQ(f.display_grid.size(), 144);
  EXPECT_NEAR(f.re_max, ReMax(4), 0.0);
  for (double e : f.raster_eta) EXPECT_NEAR(e, 1.0, 1e-12);
  for (int q = 0; q < 144; ++q) {
    EXPECT_NEAR(f.eta[q], 1.0, 1e-12);
    EXPECT_NEAR(f.re_norm[q], 0.8, 1e-12);
    EXPECT_TRUE(f.re_defined[q]);
    EXPECT_LT((f.re_unit[q].vec() - f.display_grid.point(q).vec()).norm(), 1e-10);
  }
}

TEST(FieldTest, DegenerateOperatorMarksUndefined) {
  const ResponseField f = CharacterizeField(IdentityPlusMirrorOp(4), DisplayGrid(),
                                            EquirectRaster(10.0), DefaultQuadratureGrid(4));
  for (int q = 0; q < 144; ++q) {
    EXPECT_FALSE(f.re_defined[q]);
    EXPECT_LT(f.re_norm[q], 1e-10);
  }
}

TEST(FieldTest, IndependentOfThreadCount) {
  oracle::Rng rng(60);
  const ShOperator t = RandomOp(rng, 4, 3);
  const ResponseField a =
      CharacterizeField(t, DisplayGrid(), EquirectRaster(5.0), DefaultQuadratureGrid(3), 1);
  const ResponseField b =
      CharacterizeField(t, DisplayGrid(), EquirectRaster(5.0), DefaultQuadratureGrid(3), 7);
  EXPECT_EQ(a.eta, b.eta);
  EXPECT_EQ(a.re_norm, b.re_norm);
  EXPECT_EQ(a.raster_eta, b.raster_eta);
  EXPECT_EQ(a.re_defined, b.re_defined);
  EXPECT_EQ(a.n_in, 4);
  EXPECT_EQ(a.n_out, 3);
  EXPECT_EQ(a.re_max, ReMax(3));
}

TEST(FieldTest, RotationKeepsUniformGain) {
  const ShOperator t = RotationOp(Rotation3::FromAxisAngle(Eigen::Vector3d(1, 1, 1), kPi / 3), 4);
  const ResponseField f =
      CharacterizeField(t, DisplayGrid(), EquirectRaster(2.0), DefaultQuadratureGrid(4), 4);
  for (double e : f.raster_eta) EXPECT_NEAR(e, 1.0, 1e-9);
}

TEST(FieldTest, WarpDisplacementLargestAtEquator) {
  const ShOperator t = WarpOpConverged(0.8, 4, 4).op;
  const SphereGrid quad = DefaultQuadratureGrid(4);
  auto displacement = [&](double theta) {
    const Direction s = Direction::FromSpherical(theta, 0.3);
    return s.AngleTo(Direction::FromCartesian(EnergyVector(t, s, quad)));
  };
  EXPECT_GT(displacement(kPi / 2), displacement(kPi / 6));
  EXPECT_GT(displacement(kPi / 2), displacement(5 * kPi / 6));
}

// The equator-versus-south ordering is set by the band limit: the bare map
// has it, order 10 recovers it.
TEST(FieldTest, WarpDisplacementOrderingAtHighOrder) {
  const ShOperator t = WarpOpConverged(0.8, 10, 10).op;
  const SphereGrid quad = DefaultQuadratureGrid(10);
  auto displacement = [&](double theta) {
    const Direction s = Direction::FromSpherical(theta, 0.3);
    return s.AngleTo(Direction::FromCartesian(EnergyVector(t, s, quad)));
  };
  EXPECT_GT(kPi / 2 - WarpF(kPi / 2, 0.8), 5 * kPi / 6 - WarpF(5 * kPi / 6, 0.8));
  EXPECT_GT(displacement(kPi / 2), displacement(kPi / 6));
  EXPECT_GT(displacement(kPi / 2), displacement(5 * kPi / 6));
}

TEST(FieldExportTest, JsonAndCsv) {
  const ResponseField f =
      CharacterizeField(IdentityOp(2), DisplayGrid(), EquirectRaster(30.0), DefaultQuadratureGrid(2));
  const auto dir = std::filesystem::temp_directory_path();
  const auto json_path = dir / "shviz_field_test.json";
  const auto csv_path = dir / "shviz_field_test.csv";
  WriteFieldJson(f, json_path);
  WriteRasterCsv(f, csv_path);

  std::ifstream jf(json_path);
  const nlohmann::json j = nlohmann::json::parse(jf);
  EXPECT_EQ(j["n_in"], 2);
  EXPECT_EQ(j["display_points"].size(), 144u);
  EXPECT_EQ(j["display_points"][0].size(), 2u);
  EXPECT_EQ(j["re_vec"][5].size(), 3u);
  EXPECT_EQ(j["eta"].size(), 144u);
  EXPECT_EQ(j["re_norm"].size(), 144u);
  EXPECT_EQ(j["re_defined"][0], true);
  EXPECT_NEAR(j["re_norm"][7].get<double>(), 2.0 / 3.0, 1e-12);

  std::ifstream cf(csv_path);
  std::string line;
  std::getline(cf, line);
  EXPECT_EQ(line, "theta_deg,phi_deg,eta");
  int rows = 0;
  while (std::getline(cf, line)) {
    ++rows;
    if (rows == 1) {
      EXPECT_EQ(line, "15.000000,-165.000000,1");
    }
  }
  EXPECT_EQ(rows, 12 * 6);
  std::filesystem::remove(json_path);
  std::filesystem::remove(csv_path);
  EXPECT_THROW(WriteFieldJson(f, "/nonexistent/x.json"), IoError);
}

}  // namespace
}  // namespace shviz
