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

// Linear operators on SH coefficient vectors and constructors for the common
// ones: rotation, point mirroring, inclination warping and two static Wiener
// noise-reduction filters.

#ifndef SHVIZ_OPERATORS_H_
#define SHVIZ_OPERATORS_H_

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "shviz/sh_core.h"
#include "shviz/sphere_grid.h"

namespace shviz {

// Dense (n_out+1)^2 x (n_in+1)^2 matrix, ACN-indexed on both axes.
class ShOperator {
 public:
  // Throws DimensionError on a shape mismatch and DomainError on non-finite
  // entries.
  ShOperator(int n_in, int n_out, Eigen::MatrixXd matrix);

  int n_in() const { return n_in_; }
  int n_out() const { return n_out_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  // this ∘ other. Throws DimensionError if other.n_out() != n_in().
  ShOperator operator*(const ShOperator& other) const;
  ShOperator operator+(const ShOperator& other) const;
  ShOperator Scaled(double c) const;

 private:
  int n_in_;
  int n_out_;
  Eigen::MatrixXd matrix_;
};

// T x. Throws DimensionError unless x.order() == op.n_in().
ShVector Apply(const ShOperator& op, const ShVector& x);

ShOperator IdentityOp(int order);

// Point reflection s -> -s: (-1)^n on the order-n block.
ShOperator MirrorOp(int order);

// Identity plus mirror. Doubles even orders, removes odd ones; every response
// is symmetric about the origin so its energy centroid vanishes.
ShOperator IdentityPlusMirrorOp(int order);

// Proper rotation matrix.
class Rotation3 {
 public:
  Rotation3() : m_(Eigen::Matrix3d::Identity()) {}

  // Throws ParameterError unless R^T R = I and det R = 1 within 1e-12.
  static Rotation3 FromMatrix(const Eigen::Matrix3d& m);
  // Right-handed rotation by `angle_rad` about `axis` (normalized here).
  static Rotation3 FromAxisAngle(const Eigen::Vector3d& axis, double angle_rad);

  const Eigen::Matrix3d& matrix() const { return m_; }
  Rotation3 inverse() const { return Rotation3(m_.transpose()); }
  Rotation3 operator*(const Rotation3& other) const {
    return Rotation3(m_ * other.m_);
  }
  Direction operator*(const Direction& s) const {
    return Direction::FromCartesian(m_ * s.vec());
  }

 private:
  explicit Rotation3(const Eigen::Matrix3d& m) : m_(m) {}

  Eigen::Matrix3d m_;
};

// Coefficient map of the rotated field f(R^-1 s), built order by order with
// the Ivanic-Ruedenberg recurrence for real harmonics.
ShOperator RotationOp(const Rotation3& rot, int order);

// The same operator from its integral form, by quadrature on `grid`.
// Throws PreconditionError if grid.degree() < 2 * order.
ShOperator RotationOpOracle(const Rotation3& rot, int order,
                            const SphereGrid& grid);

// Inclination warping function and its energy-equalizing gain, -1 < alpha < 1.
// f is a Möbius map in cos(theta); f with -alpha is its inverse.
double WarpF(double theta, double alpha);
double WarpG(double theta_warped, double alpha);

// Quadrature of the warping integral over the output sphere. Throws
// PreconditionError if grid.degree() < n_in + n_out.
ShOperator WarpOp(double alpha, int n_in, int n_out, const SphereGrid& grid);

struct Source {
  double amplitude = 1.0;
  double theta = 0.0;  // radians
  double phi = 0.0;    // radians
};

// Point sources in diffuse noise.
struct SourceScene {
  std::vector<Source> sources;
  double snr_db = 0.0;
  double mu = 1.0;

  // Throws ParameterError if empty, any amplitude < 0, or mu <= 0.
  void Validate() const;

  // Three sources at (0.2pi, 0), (0.5pi, pi/3), (0.8pi, -0.9pi) with
  // amplitudes 0.8, 1, 0.4; 0 dB; mu = 1.
  static SourceScene Table2();
};

struct Covariances {
  Eigen::MatrixXd desired;
  Eigen::MatrixXd noise;
};

// Desired covariance sum_i a_i^2 y_i^T y_i and diffuse noise sigma^2 I with
// 10 lg(tr desired / tr noise) = snr_db.
Covariances SceneCovariances(const SourceScene& scene, int order);

// Direction-preserving filter: spatial Wiener gains from steered-response
// powers, integrated on `grid`. Throws ParameterError for mu <= 0 and
// PreconditionError if grid.degree() < 2 * order.
ShOperator NrDpOp(const Covariances& cov, double mu, const SphereGrid& grid);
ShOperator NrDpOp(const SourceScene& scene, int order, const SphereGrid& grid);

// Matrix parametric multichannel Wiener filter desired (desired + mu noise)^-1
// by factorized solve. Throws NumericalError if the regularized matrix is
// singular.
ShOperator NrPmOp(const Covariances& cov, double mu);
ShOperator NrPmOp(const SourceScene& scene, int order);

// Result of integrating an operator on successively finer grids.
struct ConvergedOperator {
  ShOperator op;
  // Frobenius norm of the change between the last two grids.
  double residual;
  std::string grid_name;
  int grid_points;
};

// Evaluates `build` on the 21-design, then on Gauss product grids of
// increasing size, until two consecutive results differ by less than `tol`
// in Frobenius norm; returns the finer one. Throws NumericalError if the
// ladder is exhausted.
ConvergedOperator IntegrateUntilConverged(
    const std::function<ShOperator(const SphereGrid&)>& build,
    double tol = 1e-6);

ConvergedOperator WarpOpConverged(double alpha, int n_in, int n_out,
                                  double tol = 1e-6);
ConvergedOperator NrDpOpConverged(const SourceScene& scene, int order,
                                  double tol = 1e-6);

}  // namespace shviz

#endif  // SHVIZ_OPERATORS_H_
