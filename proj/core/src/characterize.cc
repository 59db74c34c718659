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

#include "shviz/characterize.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <utility>

#include "json.hpp"
#include "shviz/error.h"

namespace shviz {

namespace {

double ExcitationScale(int n_in) { return std::sqrt(kFourPi) / (n_in + 1.0); }

void CheckQuadratureDegree(const SphereGrid& grid, int n_out) {
  if (grid.degree() < 2 * n_out + 1) {
    throw PreconditionError("energy vector: quadrature grid degree " +
                            std::to_string(grid.degree()) + " < " +
                            std::to_string(2 * n_out + 1));
  }
}

// Centroid of sum_q w_q f_q^2 s_q with f = y_quad u.
Eigen::Vector3d Centroid(const Eigen::MatrixXd& y_quad, const SphereGrid& grid,
                         const Eigen::VectorXd& u) {
  const Eigen::VectorXd f = y_quad * u;
  double total = 0.0;
  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (int q = 0; q < grid.size(); ++q) {
    const double p = grid.weight(q) * f[q] * f[q];
    total += p;
    acc += p * grid.point(q).vec();
  }
  if (total < kResponseEnergyFloor) return Eigen::Vector3d::Zero();
  return acc / total;
}

// Runs body(i) for i in [0, n) on `threads` workers with contiguous chunks.
template <typename Body>
void ParallelFor(int n, int threads, const Body& body) {
  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    workers.emplace_back([begin, end, &body] {
      for (int i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

ShVector Response(const ShOperator& op, const Direction& s) {
  const Eigen::VectorXd y = EvalShRow(s, op.n_in());
  return ShVector(op.n_out(), ExcitationScale(op.n_in()) * (op.matrix() * y));
}

double DirectionalGain(const ShOperator& op, const Direction& s) {
  return Response(op, s).norm();
}

Eigen::Vector3d EnergyVector(const ShOperator& op, const Direction& s,
                             const SphereGrid& quad_grid) {
  CheckQuadratureDegree(quad_grid, op.n_out());
  return Centroid(ShMatrix(quad_grid, op.n_out()), quad_grid,
                  Response(op, s).coeffs());
}

double ReMax(int n_out) {
  if (n_out < 0) throw DomainError("re max: negative order");
  if (n_out == 0) return 0.0;
  return LegendreMaxZero(n_out + 1);
}

SphereGrid DefaultQuadratureGrid(int n_out) {
  return BuiltinTDesign(2 * n_out + 1);
}

ResponseField CharacterizeField(const ShOperator& op,
                                const SphereGrid& display_grid,
                                const SphereGrid& raster,
                                const SphereGrid& quad_grid, int threads) {
  CheckQuadratureDegree(quad_grid, op.n_out());
  const Eigen::MatrixXd y_quad = ShMatrix(quad_grid, op.n_out());
  const Eigen::MatrixXd scaled = ExcitationScale(op.n_in()) * op.matrix();

  const int q_display = display_grid.size();
  ResponseField field{
      .n_in = op.n_in(),
      .n_out = op.n_out(),
      .re_max = ReMax(op.n_out()),
      .display_grid = display_grid,
      .eta = std::vector<double>(q_display),
      .re = std::vector<Eigen::Vector3d>(q_display),
      .re_norm = std::vector<double>(q_display),
      .re_defined = std::vector<bool>(q_display),
      .re_unit = std::vector<Direction>(q_display),
      .raster = raster,
      .raster_eta = std::vector<double>(raster.size()),
  };

  // vector<bool> packs bits, so workers write through a byte buffer.
  std::vector<char> defined(q_display, 0);
  ParallelFor(q_display, threads, [&](int q) {
    const Direction& s = display_grid.point(q);
    const Eigen::VectorXd u = scaled * EvalShRow(s, op.n_in());
    field.eta[q] = u.norm();
    const Eigen::Vector3d re = Centroid(y_quad, quad_grid, u);
    field.re[q] = re;
    field.re_norm[q] = re.norm();
    if (field.re_norm[q] > kDirectionThreshold) {
      defined[q] = 1;
      field.re_unit[q] = Direction::FromCartesian(re);
    }
  });
  for (int q = 0; q < q_display; ++q) field.re_defined[q] = defined[q] != 0;

  ParallelFor(raster.size(), threads, [&](int q) {
    field.raster_eta[q] = (scaled * EvalShRow(raster.point(q), op.n_in())).norm();
  });
  return field;
}

Eigen::MatrixXd ResponseMatrix(const ShOperator& op, const SphereGrid& grid) {
  Eigen::MatrixXd u(NumCoeffs(op.n_out()), grid.size());
  for (int q = 0; q < grid.size(); ++q) {
    u.col(q) = Response(op, grid.point(q)).coeffs();
  }
  return u;
}

ShOperator ReconstructOperator(const Eigen::MatrixXd& responses,
                               const SphereGrid& grid, int n_in) {
  if (grid.degree() < 2 * n_in) {
    throw PreconditionError("reconstruct: grid degree " +
                            std::to_string(grid.degree()) + " < " +
                            std::to_string(2 * n_in));
  }
  if (responses.cols() != grid.size()) {
    throw DimensionError("reconstruct: one response per grid point expected");
  }
  const int n_out = AcnOrder(static_cast<int>(responses.rows()) - 1);
  if (NumCoeffs(n_out) != responses.rows()) {
    throw DimensionError("reconstruct: response length is not (N+1)^2");
  }
  // T = sum_q w_q u_q y(s_q) / excitation scale; for equal weights this is
  // sqrt(4 pi (N+1)^2) / Q * U Y.
  const Eigen::MatrixXd y = ShMatrix(grid, n_in);
  const Eigen::Map<const Eigen::VectorXd> w(grid.weights().data(), grid.size());
  Eigen::MatrixXd t = responses * w.asDiagonal() * y;
  t /= ExcitationScale(n_in);
  return ShOperator(n_in, n_out, std::move(t));
}

void WriteFieldJson(const ResponseField& field,
                    const std::filesystem::path& path) {
  nlohmann::json j;
  j["n_in"] = field.n_in;
  j["n_out"] = field.n_out;
  j["re_max"] = field.re_max;
  j["direction_threshold"] = kDirectionThreshold;
  auto& points = j["display_points"] = nlohmann::json::array();
  auto& re_vec = j["re_vec"] = nlohmann::json::array();
  for (int q = 0; q < field.display_grid.size(); ++q) {
    const Direction& s = field.display_grid.point(q);
    points.push_back({s.theta(), s.phi()});
    re_vec.push_back({field.re[q].x(), field.re[q].y(), field.re[q].z()});
  }
  j["eta"] = field.eta;
  j["re_norm"] = field.re_norm;
  j["re_defined"] = field.re_defined;

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

void WriteRasterCsv(const ResponseField& field,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "theta_deg,phi_deg,eta\n";
  char line[96];
  for (int q = 0; q < field.raster.size(); ++q) {
    const Direction& s = field.raster.point(q);
    std::snprintf(line, sizeof(line), "%.6f,%.6f,%.12g\n",
                  s.theta() * 180.0 / kPi, s.phi() * 180.0 / kPi,
                  field.raster_eta[q]);
    out << line;
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace shviz
