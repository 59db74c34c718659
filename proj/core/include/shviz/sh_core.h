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

// Real orthonormal spherical harmonics in ACN channel order.
//
// Y_n^m(theta, phi) = K_n^|m| P_n^|m|(cos theta) * { sqrt2 cos(m phi)   m > 0
//                                                  { 1                 m = 0
//                                                  { sqrt2 sin(|m| phi) m < 0
// with K chosen so that the basis is orthonormal over the unit sphere and no
// Condon-Shortley phase. Channel index is n^2 + n + m.

#ifndef SHVIZ_SH_CORE_H_
#define SHVIZ_SH_CORE_H_

#include <Eigen/Core>

#include "shviz/direction.h"
#include "shviz/sphere_grid.h"

namespace shviz {

inline constexpr int kMaxOrder = 25;

// (N+1)^2.
constexpr int NumCoeffs(int order) { return (order + 1) * (order + 1); }

// n^2 + n + m. Throws DomainError unless 0 <= n and |m| <= n.
int AcnIndex(int n, int m);

// Order n of ACN channel `index`.
int AcnOrder(int index);

// Evaluated basis row y_N(s), length (N+1)^2.
using ShBasisRow = Eigen::VectorXd;

// SH coefficients of order N in ACN order.
class ShVector {
 public:
  // All-zero vector of the given order.
  explicit ShVector(int order);
  // Throws DimensionError if coeffs.size() != (order+1)^2 and DomainError on
  // non-finite entries.
  ShVector(int order, Eigen::VectorXd coeffs);

  // Unit vector e_index.
  static ShVector Unit(int order, int index);

  int order() const { return order_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  double operator[](int i) const { return coeffs_[i]; }
  double norm() const { return coeffs_.norm(); }

  // Keeps orders <= `order`; zero-pads when extending.
  ShVector Truncated(int order) const;

 private:
  int order_;
  Eigen::VectorXd coeffs_;
};

// Legendre polynomial P_n(x) by the three-term recurrence. Throws DomainError
// for |x| > 1 or n < 0.
double LegendreP(int n, double x);

// Largest root of P_n, n >= 1. Residual |P_n(root)| < 1e-12.
double LegendreMaxZero(int n);

// y_N(s). Throws DomainError for order outside [0, kMaxOrder].
ShBasisRow EvalShRow(const Direction& s, int order);

// Q x (N+1)^2 matrix whose q-th row is y_N(s_q).
Eigen::MatrixXd ShMatrix(const SphereGrid& grid, int order);

// Field values Y x at the grid points.
Eigen::VectorXd Synthesize(const ShVector& x, const SphereGrid& grid);

// Weighted projection sum_q w_q y_N(s_q)^T f_q. Exact for band-limited fields
// when the grid degree is at least 2 * order. Throws DimensionError if
// values.size() != grid.size().
ShVector Analyze(const Eigen::VectorXd& values, const SphereGrid& grid,
                 int order);

// Unit-norm band-limited Dirac sqrt(4 pi / (N+1)^2) y_N(s)^T.
ShVector DiracExcitation(const Direction& s, int order);

}  // namespace shviz

#endif  // SHVIZ_SH_CORE_H_
