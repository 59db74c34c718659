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

#ifndef SHVIZ_SPHERE_GRID_H_
#define SHVIZ_SPHERE_GRID_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shviz/direction.h"

namespace shviz {

// Shape of a cell-centred equirectangular raster. Points are stored row-major
// starting at the row nearest theta = 0 and at phi = -180 deg within a row.
struct RasterLayout {
  int cols = 0;
  int rows = 0;
  double cell_phi_deg = 0.0;
  double cell_theta_deg = 0.0;
};

// A set of directions with quadrature weights (steradians) and the polynomial
// degree up to which the weighted sum integrates exactly.
//
// Designs carry the equal weight 4*pi/Q. Display rasters carry the cell solid
// angle and declare degree 0.
class SphereGrid {
 public:
  SphereGrid(std::vector<Direction> points, std::vector<double> weights,
             int degree, std::string name,
             std::optional<RasterLayout> raster = std::nullopt);

  static SphereGrid EqualWeight(std::vector<Direction> points, int degree,
                                std::string name);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Direction>& points() const { return points_; }
  const Direction& point(int q) const { return points_[q]; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int q) const { return weights_[q]; }
  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::optional<RasterLayout>& raster() const { return raster_; }

 private:
  std::vector<Direction> points_;
  std::vector<double> weights_;
  int degree_;
  std::string name_;
  std::optional<RasterLayout> raster_;
};

// Degrees of the compiled-in spherical t-designs, ascending.
const std::vector<int>& BuiltinDesignDegrees();

// Smallest compiled-in design with degree >= `min_degree`. Throws
// UnsupportedDegreeError above 21.
SphereGrid BuiltinTDesign(int min_degree);

// The compiled-in design with exactly `num_points` points. Throws
// ParameterError if none exists.
SphereGrid BuiltinTDesignWithSize(int num_points);

// The 144-point design used for energy-vector marks.
SphereGrid DisplayGrid();

// Cell-centre raster of ceil(360/cell) x ceil(180/cell) points.
SphereGrid EquirectRaster(double cell_deg);

// Gauss-Legendre nodes in cos(theta) times 2*num_theta equispaced azimuths;
// integrates polynomials up to degree 2*num_theta - 1 exactly. Used when
// integrands are not band-limited and the designs run out.
SphereGrid GaussProductGrid(int num_theta);

// True iff the weighted Gram matrix of the SH basis at order floor(t/2)
// equals the identity within 1e-9.
bool VerifyDegree(const SphereGrid& grid, int t);

// Parses the plain-text grid format: one point per line as three Cartesian
// components, '#' starts a comment. Points within 1e-6 of unit length are
// renormalized; anything further off is rejected with IoError.
SphereGrid ParseGridText(std::string_view text, int degree, std::string name);
SphereGrid LoadGridFile(const std::filesystem::path& path, int degree,
                        std::string name);

namespace detail {

struct EmbeddedDesign {
  int degree;
  const char* name;
  const char* text;
};

const std::vector<EmbeddedDesign>& EmbeddedDesigns();

}  // namespace detail

}  // namespace shviz

#endif  // SHVIZ_SPHERE_GRID_H_
