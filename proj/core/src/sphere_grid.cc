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

#include "shviz/sphere_grid.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "shviz/error.h"
#include "shviz/sh_core.h"

namespace shviz {

SphereGrid::SphereGrid(std::vector<Direction> points,
                       std::vector<double> weights, int degree,
                       std::string name, std::optional<RasterLayout> raster)
    : points_(std::move(points)),
      weights_(std::move(weights)),
      degree_(degree),
      name_(std::move(name)),
      raster_(raster) {
  if (points_.empty()) throw ParameterError("sphere grid: no points");
  if (points_.size() != weights_.size()) {
    throw DimensionError("sphere grid: points and weights differ in length");
  }
  if (degree_ < 0) throw ParameterError("sphere grid: negative degree");
}

SphereGrid SphereGrid::EqualWeight(std::vector<Direction> points, int degree,
                                   std::string name) {
  const double w = kFourPi / static_cast<double>(points.size());
  std::vector<double> weights(points.size(), w);
  return SphereGrid(std::move(points), std::move(weights), degree,
                    std::move(name));
}

SphereGrid ParseGridText(std::string_view text, int degree, std::string name) {
  std::vector<Direction> points;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    double x, y, z;
    if (!(fields >> x)) continue;  // blank or comment-only
    std::string rest;
    if (!(fields >> y >> z) || (fields >> rest)) {
      throw IoError("grid " + name + ", line " + std::to_string(line_no) +
                    ": expected three numbers");
    }
    const Eigen::Vector3d v(x, y, z);
    const double len = v.norm();
    if (!std::isfinite(len) || std::abs(len - 1.0) >= 1e-6) {
      throw IoError("grid " + name + ", line " + std::to_string(line_no) +
                    ": point is not on the unit sphere");
    }
    points.push_back(Direction::FromCartesian(v));
  }
  if (points.empty()) throw IoError("grid " + name + ": no points");
  return SphereGrid::EqualWeight(std::move(points), degree, std::move(name));
}

SphereGrid LoadGridFile(const std::filesystem::path& path, int degree,
                        std::string name) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grid file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGridText(buf.str(), degree, std::move(name));
}

const std::vector<int>& BuiltinDesignDegrees() {
  static const std::vector<int> degrees = [] {
    std::vector<int> d;
    for (const auto& e : detail::EmbeddedDesigns()) d.push_back(e.degree);
    return d;
  }();
  return degrees;
}

namespace {

SphereGrid LoadEmbedded(const detail::EmbeddedDesign& e) {
  return ParseGridText(e.text, e.degree, e.name);
}

}  // namespace

SphereGrid BuiltinTDesign(int min_degree) {
  for (const auto& e : detail::EmbeddedDesigns()) {
    if (e.degree >= min_degree) return LoadEmbedded(e);
  }
  throw UnsupportedDegreeError("no embedded t-design of degree >= " +
                               std::to_string(min_degree));
}

SphereGrid BuiltinTDesignWithSize(int num_points) {
  for (const auto& e : detail::EmbeddedDesigns()) {
    SphereGrid g = LoadEmbedded(e);
    if (g.size() == num_points) return g;
  }
  throw ParameterError("no embedded t-design with " +
                       std::to_string(num_points) + " points");
}

SphereGrid DisplayGrid() { return BuiltinTDesignWithSize(144); }

SphereGrid EquirectRaster(double cell_deg) {
  if (!(cell_deg >= 0.1 && cell_deg <= 30.0)) {
    throw ParameterError("raster cell must be within [0.1, 30] degrees");
  }
  RasterLayout layout;
  layout.cols = static_cast<int>(std::ceil(360.0 / cell_deg - 1e-9));
  layout.rows = static_cast<int>(std::ceil(180.0 / cell_deg - 1e-9));
  layout.cell_phi_deg = 360.0 / layout.cols;
  layout.cell_theta_deg = 180.0 / layout.rows;

  const double dphi = 2.0 * kPi / layout.cols;
  const double dtheta = kPi / layout.rows;
  std::vector<Direction> points;
  std::vector<double> weights;
  points.reserve(static_cast<size_t>(layout.cols) * layout.rows);
  weights.reserve(points.capacity());
  for (int r = 0; r < layout.rows; ++r) {
    const double theta = (r + 0.5) * dtheta;
    const double w = std::sin(theta) * dtheta * dphi;
    for (int c = 0; c < layout.cols; ++c) {
      const double phi = -kPi + (c + 0.5) * dphi;
      points.push_back(Direction::FromSpherical(theta, phi));
      weights.push_back(w);
    }
  }
  return SphereGrid(std::move(points), std::move(weights), 0,
                    "equirect_" + std::to_string(layout.cols) + "x" +
                        std::to_string(layout.rows),
                    layout);
}

SphereGrid GaussProductGrid(int num_theta) {
  if (num_theta < 1) throw ParameterError("gauss grid: need >= 1 node");
  const int L = num_theta;
  // Gauss-Legendre nodes/weights on [-1, 1] by Newton on P_L.
  std::vector<double> nodes(L), gw(L);
  for (int i = 0; i < L; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (L + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p_prev = 1.0, p = x;
      for (int k = 2; k <= L; ++k) {
        const double p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
        p_prev = p;
        p = p_next;
      }
      dp = L * (x * p - p_prev) / (x * x - 1.0);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes[i] = x;
    gw[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  const int n_phi = 2 * L;
  const double dphi = 2.0 * kPi / n_phi;
  std::vector<Direction> points;
  std::vector<double> weights;
  for (int i = 0; i < L; ++i) {
    const double theta = std::acos(nodes[i]);
    for (int j = 0; j < n_phi; ++j) {
      points.push_back(Direction::FromSpherical(theta, -kPi + (j + 0.5) * dphi));
      weights.push_back(gw[i] * dphi);
    }
  }
  return SphereGrid(std::move(points), std::move(weights), 2 * L - 1,
                    "gauss_" + std::to_string(L));
}

bool VerifyDegree(const SphereGrid& grid, int t) {
  if (t < 0 || t > 2 * kMaxOrder) {
    throw ParameterError("verify degree: t must be within [0, 50]");
  }
  const int order = t / 2;
  const Eigen::MatrixXd y = ShMatrix(grid, order);
  const Eigen::Map<const Eigen::VectorXd> w(grid.weights().data(), grid.size());
  const Eigen::MatrixXd gram = y.transpose() * w.asDiagonal() * y;
  const Eigen::MatrixXd err =
      gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
  return err.cwiseAbs().maxCoeff() < 1e-9;
}

}  // namespace shviz
