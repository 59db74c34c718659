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

#include <gtest/gtest.h>

#include "oracles.h"
#include "shviz/error.h"
#include "shviz/sh_core.h"
#include "shviz/sphere_grid.h"

namespace shviz {
namespace {

TEST(DirectionTest, CartesianSphericalRoundTrip) {
  oracle::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Eigen::Vector3d v = rng.UnitVector();
    const Direction d = Direction::FromCartesian(3.0 * v);
    EXPECT_NEAR(d.vec().norm(), 1.0, 1e-12);
    if (std::hypot(v.x(), v.y()) < 1e-6) continue;
    const Direction back = Direction::FromSpherical(d.theta(), d.phi());
    EXPECT_LT((back.vec() - v).norm(), 1e-12);
    EXPECT_GE(d.theta(), 0.0);
    EXPECT_LE(d.theta(), kPi);
    EXPECT_GT(d.phi(), -kPi);
    EXPECT_LE(d.phi(), kPi);
  }
}

TEST(DirectionTest, PolesHaveZeroAzimuth) {
  EXPECT_EQ(Direction::FromCartesian(0, 0, 1).phi(), 0.0);
  EXPECT_EQ(Direction::FromCartesian(0, 0, -2).phi(), 0.0);
  EXPECT_NEAR(Direction::FromCartesian(0, 0, -1).theta(), kPi, 1e-15);
}

TEST(DirectionTest, NegativeXAxisFoldsToPlusPi) {
  EXPECT_EQ(Direction::FromCartesian(-1, -0.0, 0).phi(), kPi);
}

TEST(DirectionTest, RejectsZeroAndNonFinite) {
  EXPECT_THROW(Direction::FromCartesian(0, 0, 0), DomainError);
  EXPECT_THROW(Direction::FromCartesian(NAN, 0, 1), DomainError);
}

TEST(DirectionTest, AngleToIsAccurateForTinyAndLargeAngles) {
  const Direction a = Direction::FromSpherical(1.0, 0.3);
  EXPECT_NEAR(a.AngleTo(Direction::FromSpherical(1.0 + 1e-9, 0.3)), 1e-9, 1e-16);
  EXPECT_NEAR(a.AngleTo(-a), kPi, 1e-15);
}

TEST(AcnTest, IndexExamples) {
  EXPECT_EQ(AcnIndex(0, 0), 0);
  EXPECT_EQ(AcnIndex(1, -1), 1);
  EXPECT_EQ(AcnIndex(4, 4), 24);
}

TEST(AcnTest, BijectiveAndInvertible) {
  std::vector<int> seen(NumCoeffs(10), 0);
  for (int n = 0; n <= 10; ++n) {
    for (int m = -n; m <= n; ++m) {
      const int i = AcnIndex(n, m);
      ASSERT_GE(i, 0);
      ASSERT_LT(i, NumCoeffs(10));
      ++seen[i];
      EXPECT_EQ(AcnOrder(i), n);
    }
  }
  for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(AcnTest, RejectsOutOfRange) {
  EXPECT_THROW(AcnIndex(-1, 0), DomainError);
  EXPECT_THROW(AcnIndex(2, 3), DomainError);
  EXPECT_THROW(AcnIndex(2, -3), DomainError);
}

TEST(ShVectorTest, Validation) {
  EXPECT_EQ(ShVector(3).size(), 16);
  EXPECT_THROW(ShVector(2, Eigen::VectorXd::Zero(8)), DimensionError);
  Eigen::VectorXd bad = Eigen::VectorXd::Zero(4);
  bad[2] = INFINITY;
  EXPECT_THROW(ShVector(1, bad), DomainError);
  EXPECT_THROW(ShVector(-1), DomainError);
  EXPECT_EQ(ShVector::Unit(2, 5)[5], 1.0);
  EXPECT_THROW(ShVector::Unit(2, 9), DomainError);
}

TEST(ShVectorTest, TruncateAndPad) {
  Eigen::VectorXd c = Eigen::VectorXd::LinSpaced(9, 1, 9);
  const ShVector x(2, c);
  const ShVector t = x.Truncated(1);
  ASSERT_EQ(t.size(), 4);
  EXPECT_EQ(t[3], 4.0);
  const ShVector p = x.Truncated(3);
  ASSERT_EQ(p.size(), 16);
  EXPECT_EQ(p[8], 9.0);
  EXPECT_EQ(p[15], 0.0);
}

TEST(LegendreTest, Examples) {
  EXPECT_DOUBLE_EQ(LegendreP(2, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(LegendreP(2, 0.0), -0.5);
  EXPECT_NEAR(LegendreP(5, 0.906179845938664), 0.0, 1e-12);
  EXPECT_THROW(LegendreP(2, 1.0 + 1e-9), DomainError);
  EXPECT_THROW(LegendreP(-1, 0.0), DomainError);
}

TEST(LegendreTest, MatchesReference) {
  for (int n = 0; n <= 25; ++n) {
    for (int k = 0; k <= 40; ++k) {
      const double x = -1.0 + k / 20.0;
      EXPECT_NEAR(LegendreP(n, x), oracle::Legendre(n, x), 1e-13) << n << " " << x;
    }
  }
}

TEST(LegendreTest, LargestRootAgainstEigenvalueMethod) {
  for (int n = 1; n <= 21; ++n) {
    const oracle::GaussRule g = oracle::GolubWelsch(n);
    const double expected = g.nodes.back();
    const double root = LegendreMaxZero(n);
    EXPECT_NEAR(root, expected, 1e-13) << n;
    EXPECT_LT(std::abs(oracle::Legendre(n, root)), 1e-12) << n;
  }
}

TEST(LegendreTest, LargestRootReproducesPublishedTable) {
  const auto& table = oracle::PublishedTable();
  double previous = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const double root = LegendreMaxZero(n + 1);
    EXPECT_GT(root, previous);
    previous = root;
    char got[16];
    char want[16];
    std::snprintf(got, sizeof(got), "%.3f", root);
    std::snprintf(want, sizeof(want), "%.3f", table[n - 1].second);
    EXPECT_STREQ(got, want) << "order " << n;
  }
  EXPECT_NEAR(LegendreMaxZero(2), 0.577, 5e-4);
  EXPECT_NEAR(LegendreMaxZero(5), 0.906, 5e-4);
  EXPECT_NEAR(LegendreMaxZero(11), 0.978, 5e-4);
}

TEST(ShRowTest, ClosedFormEntries) {
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Direction s = Direction::FromCartesian(rng.UnitVector());
    EXPECT_NEAR(EvalShRow(s, 3)[0], 1.0 / std::sqrt(4.0 * kPi), 1e-12);
  }
  EXPECT_NEAR(EvalShRow(Direction(), 1)[AcnIndex(1, 0)], std::sqrt(3.0 / (4.0 * kPi)),
              1e-12);
  // Dipoles point along y, z, x.
  const Eigen::VectorXd y = EvalShRow(Direction::FromCartesian(1, 0, 0), 1);
  EXPECT_NEAR(y[3], std::sqrt(3.0 / (4.0 * kPi)), 1e-12);
  EXPECT_NEAR(y[1], 0.0, 1e-12);
  EXPECT_NEAR(EvalShRow(Direction::FromCartesian(0, 1, 0), 1)[1],
              std::sqrt(3.0 / (4.0 * kPi)), 1e-12);
}

TEST(ShRowTest, MatchesSpecialFunctionReference) {
  oracle::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d v = rng.UnitVector();
    const Direction s = Direction::FromCartesian(v);
    const Eigen::VectorXd got = EvalShRow(s, 10);
    const Eigen::VectorXd want =
        oracle::RealShRow(10, oracle::Inclination(v), oracle::Azimuth(v));
    EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ShRowTest, BoundedUpToMaxOrder) {
  oracle::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Vector3d v = i < 2 ? Eigen::Vector3d(0, 0, i ? 1 : -1) : rng.UnitVector();
    const Eigen::VectorXd y = EvalShRow(Direction::FromCartesian(v), kMaxOrder);
    ASSERT_TRUE(y.allFinite());
    for (int k = 0; k < y.size(); ++k) {
      const int n = AcnOrder(k);
      EXPECT_LE(std::abs(y[k]), std::sqrt((2.0 * n + 1.0) / (4.0 * kPi)) + 1e-9);
    }
  }
  EXPECT_THROW(EvalShRow(Direction(), kMaxOrder + 1), DomainError);
}

TEST(ShRowTest, AdditionTheorem) {
  oracle::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Direction a = Direction::FromCartesian(rng.UnitVector());
    const Direction b = Direction::FromCartesian(rng.UnitVector());
    const Eigen::VectorXd ya = EvalShRow(a, 10);
    const Eigen::VectorXd yb = EvalShRow(b, 10);
    const double c = std::clamp(a.vec().dot(b.vec()), -1.0, 1.0);
    for (int n = 0; n <= 10; ++n) {
      const double lhs = ya.segment(n * n, 2 * n + 1).dot(yb.segment(n * n, 2 * n + 1));
      EXPECT_NEAR(lhs, (2.0 * n + 1.0) / (4.0 * kPi) * oracle::Legendre(n, c), 1e-12);
    }
  }
}

TEST(ShRowTest, OrthonormalOnEveryEmbeddedDesign) {
  for (int t : BuiltinDesignDegrees()) {
    const SphereGrid grid = BuiltinTDesign(t);
    const int order = t / 2;
    const Eigen::MatrixXd y = ShMatrix(grid, order);
    const Eigen::MatrixXd gram = (4.0 * kPi / grid.size()) * y.transpose() * y;
    const double err =
        (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    EXPECT_LT(err, 1e-10) << grid.name();
  }
}

TEST(TransformTest, ConstantField) {
  const SphereGrid grid = BuiltinTDesign(4);
  const Eigen::VectorXd f = Synthesize(ShVector::Unit(2, 0), grid);
  for (int q = 0; q < grid.size(); ++q) EXPECT_NEAR(f[q], 1.0 / std::sqrt(4.0 * kPi), 1e-14);
  const ShVector x = Analyze(f, grid, 2);
  EXPECT_NEAR(x[0], 1.0, 1e-12);
  EXPECT_LT(x.coeffs().tail(8).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TransformTest, ParsevalAndRoundTrip) {
  oracle::Rng rng(17);
  const SphereGrid grid = BuiltinTDesign(8);
  for (int i = 0; i < 20; ++i) {
    const ShVector x(4, rng.NormalVector(25));
    const Eigen::VectorXd f = Synthesize(x, grid);
    EXPECT_NEAR(4.0 * kPi / grid.size() * f.squaredNorm(), x.coeffs().squaredNorm(),
                1e-10 * x.coeffs().squaredNorm());
    EXPECT_LT((Analyze(f, grid, 4).coeffs() - x.coeffs()).norm(), 1e-10);
    EXPECT_LT((Analyze(f, grid, 2).coeffs() - x.coeffs().head(9)).norm(), 1e-10);
  }
  EXPECT_THROW(Analyze(Eigen::VectorXd::Zero(3), grid, 2), DimensionError);
}

TEST(DiracTest, UnitNormAndPeak) {
  oracle::Rng rng(19);
  for (int order = 0; order <= 10; ++order) {
    const Direction s = Direction::FromCartesian(rng.UnitVector());
    const ShVector d = DiracExcitation(s, order);
    EXPECT_NEAR(d.norm(), 1.0, 1e-12);
  }
  EXPECT_NEAR(DiracExcitation(Direction(), 0)[0], 1.0, 1e-15);
  const Direction s = Direction::FromSpherical(0.7, -2.0);
  const double peak = EvalShRow(s, 4).dot(DiracExcitation(s, 4).coeffs());
  EXPECT_NEAR(peak, 5.0 / std::sqrt(4.0 * kPi), 1e-12);
  EXPECT_NEAR(peak, 1.41047, 1e-5);
}

TEST(DiracTest, PatternMatchesClosedForm) {
  for (int order = 1; order <= 5; ++order) {
    const Direction center = Direction::FromSpherical(1.1, 0.4);
    const ShVector d = DiracExcitation(center, order);
    // Walk along a meridian-crossing great circle away from the centre.
    const Eigen::Vector3d u = center.vec();
    const Eigen::Vector3d w = u.cross(Eigen::Vector3d(0.3, -0.5, 0.8)).normalized();
    for (int k = 0; k <= 180; ++k) {
      const double delta = k * kPi / 180.0;
      const Direction s =
          Direction::FromCartesian(std::cos(delta) * u + std::sin(delta) * w);
      EXPECT_NEAR(EvalShRow(s, order).dot(d.coeffs()), oracle::DiracPattern(order, delta),
                  1e-12);
    }
  }
}

}  // namespace
}  // namespace shviz
