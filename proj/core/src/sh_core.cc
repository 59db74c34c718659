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

#include "shviz/sh_core.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Geometry>

#include "shviz/error.h"

namespace shviz {

Direction Direction::FromCartesian(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n == 0.0) {
    throw DomainError("direction: zero or non-finite vector");
  }
  return Direction(v / n);
}

Direction Direction::FromSpherical(double theta, double phi) {
  const double st = std::sin(theta);
  return FromCartesian(
      Eigen::Vector3d(st * std::cos(phi), st * std::sin(phi), std::cos(theta)));
}

double Direction::theta() const {
  return std::atan2(std::hypot(v_.x(), v_.y()), v_.z());
}

double Direction::phi() const {
  if (std::hypot(v_.x(), v_.y()) < kPoleSinThreshold) return 0.0;
  const double p = std::atan2(v_.y(), v_.x());
  // atan2 yields [-pi, pi]; fold -pi onto the half-open range's end.
  return p == -kPi ? kPi : p;
}

double Direction::AngleTo(const Direction& other) const {
  // atan2 form stays accurate for both tiny and near-pi angles.
  return std::atan2(v_.cross(other.v_).norm(), v_.dot(other.v_));
}

int AcnIndex(int n, int m) {
  if (n < 0 || m < -n || m > n) {
    throw DomainError("acn index: (n, m) = (" + std::to_string(n) + ", " +
                      std::to_string(m) + ") out of range");
  }
  return n * n + n + m;
}

int AcnOrder(int index) {
  int n = static_cast<int>(std::sqrt(static_cast<double>(index)));
  while (n * n > index) --n;
  while ((n + 1) * (n + 1) <= index) ++n;
  return n;
}

ShVector::ShVector(int order)
    : order_(order), coeffs_(Eigen::VectorXd::Zero(NumCoeffs(order))) {
  if (order < 0) throw DomainError("sh vector: negative order");
}

ShVector::ShVector(int order, Eigen::VectorXd coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw DomainError("sh vector: negative order");
  if (coeffs_.size() != NumCoeffs(order)) {
    throw DimensionError("sh vector: expected " +
                         std::to_string(NumCoeffs(order)) +
                         " coefficients for order " + std::to_string(order) +
                         ", got " + std::to_string(coeffs_.size()));
  }
  if (!coeffs_.allFinite()) throw DomainError("sh vector: non-finite entry");
}

ShVector ShVector::Unit(int order, int index) {
  ShVector v(order);
  if (index < 0 || index >= v.size()) {
    throw DomainError("sh vector: unit index out of range");
  }
  v.coeffs_[index] = 1.0;
  return v;
}

ShVector ShVector::Truncated(int order) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(NumCoeffs(order));
  const int keep = std::min(NumCoeffs(order), size());
  out.head(keep) = coeffs_.head(keep);
  return ShVector(order, std::move(out));
}

double LegendreP(int n, double x) {
  if (n < 0) throw DomainError("legendre: negative degree");
  if (!(std::abs(x) <= 1.0)) throw DomainError("legendre: |x| > 1");
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = x;
  for (int k = 2; k <= n; ++k) {
    const double p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  return p;
}

namespace {

// P_n(x) and P_n'(x) for |x| < 1.
std::pair<double, double> LegendreWithDerivative(int n, double x) {
  double p_prev = 1.0;
  double p = x;
  for (int k = 2; k <= n; ++k) {
    const double p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  const double dp = n * (x * p - p_prev) / (x * x - 1.0);
  return {p, dp};
}

}  // namespace

double LegendreMaxZero(int n) {
  if (n < 1) throw DomainError("legendre zero: degree must be >= 1");
  if (n == 1) return 0.0;
  // Tricomi-style initial guess for the largest root; Newton from there
  // converges monotonically since P_n is convex beyond its last root.
  double x = std::cos(kPi * 0.75 / (n + 0.5));
  for (int it = 0; it < 100; ++it) {
    const auto [p, dp] = LegendreWithDerivative(n, x);
    const double step = p / dp;
    x -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return x;
}

ShBasisRow EvalShRow(const Direction& s, int order) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("sh row: order " + std::to_string(order) +
                      " outside [0, " + std::to_string(kMaxOrder) + "]");
  }
  const double ct = s.z();
  const double st = std::hypot(s.x(), s.y());
  const double phi = s.phi();

  // Fully normalized associated Legendre values pbar[n][m], m >= 0, computed
  // column by column: sectoral seed, one step up, then the three-term
  // recurrence in n.
  std::vector<double> pbar(NumCoeffs(order), 0.0);
  auto at = [&](int n, int m) -> double& { return pbar[n * n + n + m]; };

  double sectoral = 1.0 / std::sqrt(kFourPi);
  for (int m = 0; m <= order; ++m) {
    if (m > 0) sectoral *= std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * st;
    at(m, m) = sectoral;
    if (m + 1 <= order) at(m + 1, m) = std::sqrt(2.0 * m + 3.0) * ct * sectoral;
    for (int n = m + 2; n <= order; ++n) {
      const double a = std::sqrt((4.0 * n * n - 1.0) / (1.0 * n * n - 1.0 * m * m));
      const double b = std::sqrt(((n - 1.0) * (n - 1.0) - 1.0 * m * m) /
                                 (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
      at(n, m) = a * (ct * at(n - 1, m) - b * at(n - 2, m));
    }
  }

  ShBasisRow row(NumCoeffs(order));
  for (int n = 0; n <= order; ++n) {
    row[n * n + n] = at(n, 0);
    for (int m = 1; m <= n; ++m) {
      const double scaled = std::sqrt(2.0) * at(n, m);
      row[n * n + n + m] = scaled * std::cos(m * phi);
      row[n * n + n - m] = scaled * std::sin(m * phi);
    }
  }
  return row;
}

Eigen::MatrixXd ShMatrix(const SphereGrid& grid, int order) {
  Eigen::MatrixXd y(grid.size(), NumCoeffs(order));
  for (int q = 0; q < grid.size(); ++q) {
    y.row(q) = EvalShRow(grid.point(q), order).transpose();
  }
  return y;
}

Eigen::VectorXd Synthesize(const ShVector& x, const SphereGrid& grid) {
  return ShMatrix(grid, x.order()) * x.coeffs();
}

ShVector Analyze(const Eigen::VectorXd& values, const SphereGrid& grid,
                 int order) {
  if (values.size() != grid.size()) {
    throw DimensionError("analyze: " + std::to_string(values.size()) +
                         " values for a grid of " +
                         std::to_string(grid.size()) + " points");
  }
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(NumCoeffs(order));
  for (int q = 0; q < grid.size(); ++q) {
    acc += (grid.weight(q) * values[q]) * EvalShRow(grid.point(q), order);
  }
  return ShVector(order, std::move(acc));
}

ShVector DiracExcitation(const Direction& s, int order) {
  const double scale = std::sqrt(kFourPi) / (order + 1.0);
  return ShVector(order, scale * EvalShRow(s, order));
}

}  // namespace shviz
