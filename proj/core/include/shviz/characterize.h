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

// Characterization of an SH operator by its responses to band-limited Dirac
// excitations.
//
// For every excitation direction s the operator's response u(s) is reduced
// to two numbers that fit on a map:
//   * the directional gain eta(s) = |u(s)|, i.e. how much of the unit input
//     energy leaves the operator, and
//   * the energy vector r_E(s), the centroid of the response's spatial power
//     |y(s') u(s)|^2 over the sphere, normalized by the total power. Its
//     direction says where the response points; its norm says how focused
//     the response is and never exceeds the largest root of P_{N~+1}.
// The responses over a design of sufficient degree determine the operator
// completely (ReconstructOperator).

#ifndef SHVIZ_CHARACTERIZE_H_
#define SHVIZ_CHARACTERIZE_H_

#include <filesystem>
#include <vector>

#include <Eigen/Core>

#include "shviz/operators.h"
#include "shviz/sh_core.h"
#include "shviz/sphere_grid.h"

namespace shviz {

// Below this norm the energy-vector direction is reported as undefined.
inline constexpr double kDirectionThreshold = 1e-6;

// Below this total response power the energy vector is the zero vector.
inline constexpr double kResponseEnergyFloor = 1e-20;

// sqrt(4 pi / (N+1)^2) T y_N(s)^T.
ShVector Response(const ShOperator& op, const Direction& s);

// |Response(op, s)|.
double DirectionalGain(const ShOperator& op, const Direction& s);

// Energy centroid of the response by quadrature on `quad_grid`. Zero vector if
// the response power is below kResponseEnergyFloor. Throws PreconditionError
// unless quad_grid.degree() >= 2 * n_out + 1.
Eigen::Vector3d EnergyVector(const ShOperator& op, const Direction& s,
                             const SphereGrid& quad_grid);

// Largest root of P_{n_out+1}; 0 for n_out = 0.
double ReMax(int n_out);

// Smallest embedded design exact for energy vectors at output order n_out.
SphereGrid DefaultQuadratureGrid(int n_out);

struct ResponseField {
  int n_in = 0;
  int n_out = 0;
  double re_max = 0.0;

  // Per display direction.
  SphereGrid display_grid;
  std::vector<double> eta;
  std::vector<Eigen::Vector3d> re;
  std::vector<double> re_norm;
  std::vector<bool> re_defined;
  // Unit direction of re; only meaningful where re_defined.
  std::vector<Direction> re_unit;

  // Dense gain map for the background.
  SphereGrid raster;
  std::vector<double> raster_eta;
};

// Fills a ResponseField. Work is split over `threads` workers; results are
// written to fixed slots, so output does not depend on the thread count.
ResponseField CharacterizeField(const ShOperator& op,
                                const SphereGrid& display_grid,
                                const SphereGrid& raster,
                                const SphereGrid& quad_grid, int threads = 1);

// Responses as columns: (n_out+1)^2 x Q.
Eigen::MatrixXd ResponseMatrix(const ShOperator& op, const SphereGrid& grid);

// Inverse of ResponseMatrix. Throws PreconditionError if
// grid.degree() < 2 * n_in and DimensionError on shape mismatch.
ShOperator ReconstructOperator(const Eigen::MatrixXd& responses,
                               const SphereGrid& grid, int n_in);

// JSON with display_points ([theta, phi] rad), eta, re_vec, re_norm,
// re_defined, plus order and bound metadata.
void WriteFieldJson(const ResponseField& field,
                    const std::filesystem::path& path);

// CSV rows theta_deg,phi_deg,eta over the raster.
void WriteRasterCsv(const ResponseField& field,
                    const std::filesystem::path& path);

}  // namespace shviz

#endif  // SHVIZ_CHARACTERIZE_H_
