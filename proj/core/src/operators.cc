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

#include "shviz/operators.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Cholesky>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "shviz/error.h"

namespace shviz {

ShOperator::ShOperator(int n_in, int n_out, Eigen::MatrixXd matrix)
    : n_in_(n_in), n_out_(n_out), matrix_(std::move(matrix)) {
  if (n_in < 0 || n_out < 0) throw DomainError("operator: negative order");
  if (matrix_.rows() != NumCoeffs(n_out) || matrix_.cols() != NumCoeffs(n_in)) {
    throw DimensionError(
        "operator: matrix is " + std::to_string(matrix_.rows()) + "x" +
        std::to_string(matrix_.cols()) + " but orders " +
        std::to_string(n_in) + " -> " + std::to_string(n_out) + " need " +
        std::to_string(NumCoeffs(n_out)) + "x" + std::to_string(NumCoeffs(n_in)));
  }
  if (!matrix_.allFinite()) throw DomainError("operator: non-finite entry");
}

ShOperator ShOperator::operator*(const ShOperator& other) const {
  if (other.n_out_ != n_in_) {
    throw DimensionError("operator composition: order mismatch");
  }
  return ShOperator(other.n_in_, n_out_, matrix_ * other.matrix_);
}

ShOperator ShOperator::operator+(const ShOperator& other) const {
  if (other.n_in_ != n_in_ || other.n_out_ != n_out_) {
    throw DimensionError("operator sum: order mismatch");
  }
  return ShOperator(n_in_, n_out_, matrix_ + other.matrix_);
}

ShOperator ShOperator::Scaled(double c) const {
  return ShOperator(n_in_, n_out_, c * matrix_);
}

ShVector Apply(const ShOperator& op, const ShVector& x) {
  if (x.order() != op.n_in()) {
    throw DimensionError("apply: vector of order " + std::to_string(x.order()) +
                         " for an operator with input order " +
                         std::to_string(op.n_in()));
  }
  return ShVector(op.n_out(), op.matrix() * x.coeffs());
}

ShOperator IdentityOp(int order) {
  const int k = NumCoeffs(order);
  return ShOperator(order, order, Eigen::MatrixXd::Identity(k, k));
}

namespace {

Eigen::VectorXd ParityDiagonal(int order) {
  Eigen::VectorXd d(NumCoeffs(order));
  for (int i = 0; i < d.size(); ++i) d[i] = AcnOrder(i) % 2 == 0 ? 1.0 : -1.0;
  return d;
}

}  // namespace

ShOperator MirrorOp(int order) {
  return ShOperator(order, order, ParityDiagonal(order).asDiagonal().toDenseMatrix());
}

ShOperator IdentityPlusMirrorOp(int order) {
  return IdentityOp(order) + MirrorOp(order);
}

// --- Rotation ---------------------------------------------------------------

Rotation3 Rotation3::FromMatrix(const Eigen::Matrix3d& m) {
  const double ortho = (m.transpose() * m - Eigen::Matrix3d::Identity())
                           .cwiseAbs()
                           .maxCoeff();
  if (!(ortho <= 1e-12) || std::abs(m.determinant() - 1.0) > 1e-12) {
    throw ParameterError("rotation: matrix is not a proper rotation");
  }
  return Rotation3(m);
}

Rotation3 Rotation3::FromAxisAngle(const Eigen::Vector3d& axis,
                                   double angle_rad) {
  const double n = axis.norm();
  if (!std::isfinite(n) || n == 0.0 || !std::isfinite(angle_rad)) {
    throw ParameterError("rotation: axis must be a finite non-zero vector");
  }
  return Rotation3(Eigen::AngleAxisd(angle_rad, axis / n).toRotationMatrix());
}

namespace {

// Element (a, b) of a (2l+1)x(2l+1) block stored with offset l.
inline double At(const Eigen::MatrixXd& block, int l, int a, int b) {
  return block(a + l, b + l);
}

// Ivanic-Ruedenberg helper P^l_{i,a,b}; `r1` is the order-1 block and `prev`
// the order-(l-1) block.
double IrP(int i, int l, int a, int b, const Eigen::MatrixXd& r1,
           const Eigen::MatrixXd& prev) {
  const double ri1 = At(r1, 1, i, 1);
  const double rim1 = At(r1, 1, i, -1);
  const double ri0 = At(r1, 1, i, 0);
  if (b == l) {
    return ri1 * At(prev, l - 1, a, l - 1) - rim1 * At(prev, l - 1, a, -l + 1);
  }
  if (b == -l) {
    return ri1 * At(prev, l - 1, a, -l + 1) + rim1 * At(prev, l - 1, a, l - 1);
  }
  return ri0 * At(prev, l - 1, a, b);
}

Eigen::MatrixXd IrNextBlock(int l, const Eigen::MatrixXd& r1,
                            const Eigen::MatrixXd& prev) {
  Eigen::MatrixXd out(2 * l + 1, 2 * l + 1);
  for (int m = -l; m <= l; ++m) {
    const int am = std::abs(m);
    const double d = m == 0 ? 1.0 : 0.0;
    for (int n = -l; n <= l; ++n) {
      const double denom = std::abs(n) == l ? (2.0 * l) * (2.0 * l - 1.0)
                                             : (1.0 * l + n) * (1.0 * l - n);
      const double u = std::sqrt((1.0 * l + m) * (1.0 * l - m) / denom);
      const double v = 0.5 *
                       std::sqrt((1.0 + d) * (l + am - 1.0) * (1.0 * l + am) /
                                 denom) *
                       (1.0 - 2.0 * d);
      const double w =
          -0.5 * std::sqrt((l - am - 1.0) * (1.0 * l - am) / denom) * (1.0 - d);

      double value = 0.0;
      if (u != 0.0) value += u * IrP(0, l, m, n, r1, prev);
      if (v != 0.0) {
        double vv;
        if (m == 0) {
          vv = IrP(1, l, 1, n, r1, prev) + IrP(-1, l, -1, n, r1, prev);
        } else if (m > 0) {
          const double d1 = m == 1 ? 1.0 : 0.0;
          vv = IrP(1, l, m - 1, n, r1, prev) * std::sqrt(1.0 + d1) -
               IrP(-1, l, -m + 1, n, r1, prev) * (1.0 - d1);
        } else {
          const double d1 = m == -1 ? 1.0 : 0.0;
          vv = IrP(1, l, m + 1, n, r1, prev) * (1.0 - d1) +
               IrP(-1, l, -m - 1, n, r1, prev) * std::sqrt(1.0 + d1);
        }
        value += v * vv;
      }
      if (w != 0.0) {
        double ww;
        if (m > 0) {
          ww = IrP(1, l, m + 1, n, r1, prev) + IrP(-1, l, -m - 1, n, r1, prev);
        } else {
          ww = IrP(1, l, m - 1, n, r1, prev) - IrP(-1, l, -m + 1, n, r1, prev);
        }
        value += w * ww;
      }
      out(m + l, n + l) = value;
    }
  }
  return out;
}

}  // namespace

ShOperator RotationOp(const Rotation3& rot, int order) {
  if (order < 0) throw DomainError("rotation op: negative order");
  const int k = NumCoeffs(order);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  t(0, 0) = 1.0;
  if (order == 0) return ShOperator(0, 0, std::move(t));

  // Order-1 harmonics are proportional to (y, z, x).
  static constexpr int kAxis[3] = {1, 2, 0};
  Eigen::MatrixXd r1(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r1(i, j) = rot.matrix()(kAxis[i], kAxis[j]);
  }
  t.block(1, 1, 3, 3) = r1;

  Eigen::MatrixXd prev = r1;
  for (int l = 2; l <= order; ++l) {
    Eigen::MatrixXd block = IrNextBlock(l, r1, prev);
    t.block(l * l, l * l, 2 * l + 1, 2 * l + 1) = block;
    prev = std::move(block);
  }
  return ShOperator(order, order, std::move(t));
}

ShOperator RotationOpOracle(const Rotation3& rot, int order,
                            const SphereGrid& grid) {
  if (grid.degree() < 2 * order) {
    throw PreconditionError("rotation oracle: grid degree " +
                            std::to_string(grid.degree()) + " < " +
                            std::to_string(2 * order));
  }
  const Rotation3 inv = rot.inverse();
  const int k = NumCoeffs(order);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (int q = 0; q < grid.size(); ++q) {
    const Direction& s = grid.point(q);
    const ShBasisRow out = EvalShRow(s, order);
    const ShBasisRow in = EvalShRow(inv * s, order);
    t.noalias() += grid.weight(q) * out * in.transpose();
  }
  return ShOperator(order, order, std::move(t));
}

// --- Warping ----------------------------------------------------------------

namespace {

void CheckAlpha(double alpha) {
  if (!(std::abs(alpha) < 1.0)) {
    throw ParameterError("warp: alpha must satisfy -1 < alpha < 1");
  }
}

}  // namespace

double WarpF(double theta, double alpha) {
  CheckAlpha(alpha);
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw DomainError("warp: theta outside [0, pi]");
  }
  const double c = std::cos(theta);
  const double arg = (c + alpha) / (1.0 + alpha * c);
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

double WarpG(double theta_warped, double alpha) {
  CheckAlpha(alpha);
  return std::sqrt(1.0 - alpha * alpha) /
         (1.0 - alpha * std::cos(theta_warped));
}

ShOperator WarpOp(double alpha, int n_in, int n_out, const SphereGrid& grid) {
  CheckAlpha(alpha);
  if (grid.degree() < n_in + n_out) {
    throw PreconditionError("warp op: grid degree " +
                            std::to_string(grid.degree()) + " < " +
                            std::to_string(n_in + n_out));
  }
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(NumCoeffs(n_out), NumCoeffs(n_in));
  for (int q = 0; q < grid.size(); ++q) {
    const Direction& s = grid.point(q);
    const double theta_w = s.theta();
    const double theta_src = WarpF(theta_w, -alpha);
    const ShBasisRow out = EvalShRow(s, n_out);
    const ShBasisRow in = EvalShRow(Direction::FromSpherical(theta_src, s.phi()), n_in);
    t.noalias() += (grid.weight(q) * WarpG(theta_w, alpha)) * out * in.transpose();
  }
  return ShOperator(n_in, n_out, std::move(t));
}

// --- Noise reduction ----------------------------------------------------------

void SourceScene::Validate() const {
  if (sources.empty()) throw ParameterError("scene: no sources");
  for (const Source& s : sources) {
    if (!(s.amplitude >= 0.0) || !std::isfinite(s.amplitude)) {
      throw ParameterError("scene: amplitudes must be finite and >= 0");
    }
    if (!std::isfinite(s.theta) || !std::isfinite(s.phi)) {
      throw ParameterError("scene: non-finite source direction");
    }
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw ParameterError("scene: mu must be > 0");
  }
  if (!std::isfinite(snr_db)) throw ParameterError("scene: non-finite snr");
}

SourceScene SourceScene::Table2() {
  SourceScene scene;
  scene.sources = {
      {0.8, 0.2 * kPi, 0.0},
      {1.0, 0.5 * kPi, kPi / 3.0},
      {0.4, 0.8 * kPi, -0.9 * kPi},
  };
  scene.snr_db = 0.0;
  scene.mu = 1.0;
  return scene;
}

Covariances SceneCovariances(const SourceScene& scene, int order) {
  scene.Validate();
  const int k = NumCoeffs(order);
  Covariances cov;
  cov.desired = Eigen::MatrixXd::Zero(k, k);
  for (const Source& s : scene.sources) {
    const ShBasisRow y = EvalShRow(Direction::FromSpherical(s.theta, s.phi), order);
    cov.desired.noalias() += (s.amplitude * s.amplitude) * y * y.transpose();
  }
  const double noise_trace =
      cov.desired.trace() * std::pow(10.0, -scene.snr_db / 10.0);
  cov.noise = (noise_trace / k) * Eigen::MatrixXd::Identity(k, k);
  return cov;
}

namespace {

int CovarianceOrder(const Covariances& cov) {
  const auto k = cov.desired.rows();
  if (cov.desired.cols() != k || cov.noise.rows() != k || cov.noise.cols() != k) {
    throw DimensionError("covariances: shape mismatch");
  }
  const int order = AcnOrder(static_cast<int>(k) - 1);
  if (NumCoeffs(order) != k) {
    throw DimensionError("covariances: size is not (N+1)^2");
  }
  return order;
}

void CheckMu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ParameterError("mu must be > 0");
}

}  // namespace

ShOperator NrDpOp(const Covariances& cov, double mu, const SphereGrid& grid) {
  CheckMu(mu);
  const int order = CovarianceOrder(cov);
  if (grid.degree() < 2 * order) {
    throw PreconditionError("nr-dp op: grid degree " +
                            std::to_string(grid.degree()) + " < " +
                            std::to_string(2 * order));
  }
  const int k = NumCoeffs(order);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (int q = 0; q < grid.size(); ++q) {
    const ShBasisRow y = EvalShRow(grid.point(q), order);
    const double pd = y.dot(cov.desired * y);
    const double pn = y.dot(cov.noise * y);
    const double denom = pd + mu * pn;
    const double h = denom > 0.0 ? pd / denom : 0.0;
    t.noalias() += (grid.weight(q) * h) * y * y.transpose();
  }
  return ShOperator(order, order, std::move(t));
}

ShOperator NrDpOp(const SourceScene& scene, int order, const SphereGrid& grid) {
  return NrDpOp(SceneCovariances(scene, order), scene.mu, grid);
}

ShOperator NrPmOp(const Covariances& cov, double mu) {
  CheckMu(mu);
  const int order = CovarianceOrder(cov);
  const Eigen::MatrixXd a = cov.desired + mu * cov.noise;
  // T a = desired  <=>  a^T T^T = desired^T; a is symmetric.
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(a.transpose());
  const double eps = std::numeric_limits<double>::epsilon();
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
      ldlt.rcond() < a.rows() * eps) {
    throw NumericalError("nr-pm op: regularized covariance is singular");
  }
  Eigen::MatrixXd t = ldlt.solve(cov.desired.transpose()).transpose();
  return ShOperator(order, order, std::move(t));
}

ShOperator NrPmOp(const SourceScene& scene, int order) {
  return NrPmOp(SceneCovariances(scene, order), scene.mu);
}

// --- Convergence ladder -------------------------------------------------------

ConvergedOperator IntegrateUntilConverged(
    const std::function<ShOperator(const SphereGrid&)>& build, double tol) {
  std::vector<std::function<SphereGrid()>> ladder = {
      [] { return BuiltinTDesign(21); }};
  for (int l : {16, 24, 32, 48, 64, 96, 128, 192, 256}) {
    ladder.push_back([l] { return GaussProductGrid(l); });
  }

  std::optional<ShOperator> previous;
  double last_change = std::numeric_limits<double>::infinity();
  for (const auto& make_grid : ladder) {
    const SphereGrid grid = make_grid();
    std::optional<ShOperator> current;
    try {
      current.emplace(build(grid));
    } catch (const PreconditionError&) {
      continue;  // grid too coarse for this order; try the next one
    }
    if (previous) {
      last_change = (current->matrix() - previous->matrix()).norm();
      if (last_change < tol) {
        return ConvergedOperator{*current, last_change, grid.name(), grid.size()};
      }
    }
    previous = std::move(current);
  }
  throw NumericalError("quadrature did not converge: last Frobenius change " +
                       std::to_string(last_change) + " >= " +
                       std::to_string(tol));
}

ConvergedOperator WarpOpConverged(double alpha, int n_in, int n_out,
                                  double tol) {
  CheckAlpha(alpha);
  return IntegrateUntilConverged(
      [&](const SphereGrid& g) { return WarpOp(alpha, n_in, n_out, g); }, tol);
}

ConvergedOperator NrDpOpConverged(const SourceScene& scene, int order,
                                  double tol) {
  const Covariances cov = SceneCovariances(scene, order);
  return IntegrateUntilConverged(
      [&](const SphereGrid& g) { return NrDpOp(cov, scene.mu, g); }, tol);
}

}  // namespace shviz
