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


#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shviz/characterize.h"
#include "shviz/error.h"
#include "shviz/operator_io.h"
#include "shviz/operators.h"
#include "shviz/render.h"
#include "shviz/sphere_grid.h"

namespace shviz {

namespace {

namespace fs = std::filesystem;

constexpr double kDegToRad = kPi / 180.0;

// Raised for bad flag values found after parsing; reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string Format(const char* fmt, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a);
  return buf;
}

Eigen::Vector3d ParseAxis(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--axis: cannot parse '" + text + "'");
    }
  }
  if (v.size() != 3) throw UsageError("--axis needs three comma-separated numbers");
  const Eigen::Vector3d axis(v[0], v[1], v[2]);
  if (!axis.allFinite() || axis.norm() == 0.0) {
    throw UsageError("--axis must be a finite non-zero vector");
  }
  return axis;
}

void CheckOutputPath(const std::string& path, const char* flag) {
  if (path.empty()) return;
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw IoError(std::string(flag) + ": directory does not exist: " +
                  parent.string());
  }
}

void CheckInputPath(const std::string& path) {
  if (!fs::is_regular_file(path)) throw IoError("cannot open " + path);
}

// Uniform [-1, 1) entries from a 64-bit Mersenne twister; the raw engine
// output is fixed by the standard, so files match across platforms.
ShOperator RandomOp(int order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int k = NumCoeffs(order);
  Eigen::MatrixXd m(k, k);
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < k; ++r) {
      m(r, c) = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
    }
  }
  return ShOperator(order, order, m / (order + 1.0));
}

struct GenOptions {
  std::string kind;
  int order = 4;
  std::optional<int> out_order;
  std::string axis = "1,1,1";
  double angle_deg = 60.0;
  double alpha = 0.8;
  std::string preset;
  std::string scene_path;
  std::optional<double> mu;
  std::optional<double> snr_db;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  std::string out_path;
};

const std::vector<std::string>& GenKinds() {
  static const std::vector<std::string> kinds = {
      "rot",           "warp", "nr-dp", "nr-pm", "identity", "mirror",
      "identity-mirror", "eq13", "random"};
  return kinds;
}

SourceScene LoadScene(const GenOptions& o) {
  if (!o.preset.empty() && !o.scene_path.empty()) {
    throw UsageError("--preset and --scene are mutually exclusive");
  }
  SourceScene scene;
  if (!o.scene_path.empty()) {
    scene = ReadSceneFile(o.scene_path);
  } else if (o.preset.empty() || o.preset == "table2") {
    scene = SourceScene::Table2();
  } else {
    throw UsageError("unknown --preset '" + o.preset + "'");
  }
  if (o.mu) scene.mu = *o.mu;
  if (o.snr_db) scene.snr_db = *o.snr_db;
  scene.Validate();
  return scene;
}

int RunGen(const GenOptions& o, std::ostream& out) {
  if (o.order < 0 || o.order > kMaxOrder) {
    throw UsageError("--order must be within [0, " + std::to_string(kMaxOrder) + "]");
  }
  if (o.out_order && o.kind != "warp") {
    throw UsageError("--out-order applies to warp only");
  }
  const bool scene_kind = o.kind == "nr-dp" || o.kind == "nr-pm";
  if (!scene_kind && (!o.preset.empty() || !o.scene_path.empty() || o.mu || o.snr_db)) {
    throw UsageError("scene flags apply to nr-dp and nr-pm only");
  }
  if (!scene_kind && o.kind != "warp" && o.tol != 1e-6) {
    throw UsageError("--tol applies to warp and nr-dp only");
  }
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!o.scene_path.empty()) CheckInputPath(o.scene_path);
  CheckOutputPath(o.out_path, "--out");

  std::optional<ConvergedOperator> converged;
  std::optional<ShOperator> op;
  std::string note;
  if (o.kind == "rot") {
    const Eigen::Vector3d axis = ParseAxis(o.axis);
    if (!std::isfinite(o.angle_deg)) throw UsageError("--angle-deg must be finite");
    op = RotationOp(Rotation3::FromAxisAngle(axis, o.angle_deg * kDegToRad), o.order);
    const Eigen::MatrixXd& m = op->matrix();
    const double orth =
        (m.transpose() * m - Eigen::MatrixXd::Identity(m.cols(), m.cols())).norm();
    note = "orthogonality error " + Format("%.3e", orth);
  } else if (o.kind == "warp") {
    const int n_out = o.out_order.value_or(o.order);
    if (n_out < 0 || n_out > kMaxOrder) throw UsageError("--out-order out of range");
    converged = WarpOpConverged(o.alpha, o.order, n_out, o.tol);
  } else if (o.kind == "nr-dp") {
    converged = NrDpOpConverged(LoadScene(o), o.order, o.tol);
  } else if (o.kind == "nr-pm") {
    op = NrPmOp(LoadScene(o), o.order);
  } else if (o.kind == "identity") {
    op = IdentityOp(o.order);
  } else if (o.kind == "mirror") {
    op = MirrorOp(o.order);
  } else if (o.kind == "identity-mirror" || o.kind == "eq13") {  // eq13: legacy name
    op = IdentityPlusMirrorOp(o.order);
  } else if (o.kind == "random") {
    op = RandomOp(o.order, o.seed);
    note = "seed " + std::to_string(o.seed);
  }
  if (converged) {
    note = "quadrature " + converged->grid_name + " (" +
           std::to_string(converged->grid_points) + " points), residual " +
           Format("%.3e", converged->residual);
    op = converged->op;
  }

  WriteOperatorFile(*op, o.out_path);
  out << o.kind << ": " << op->matrix().rows() << "x" << op->matrix().cols()
      << " (n_in=" << op->n_in() << ", n_out=" << op->n_out() << ")";
  if (!note.empty()) out << ", " << note;
  out << " -> " << o.out_path << "\n";
  return kExitOk;
}

struct CharacterizeOptions {
  std::string op_path;
  std::string svg_path;
  std::string data_path;
  std::string ppm_path;
  std::string csv_path;
  RenderSpec spec;
  std::string trail_encoding = "color";
  int threads = 1;
};

int RunCharacterize(CharacterizeOptions o, std::ostream& out) {
  if (o.svg_path.empty() && o.data_path.empty() && o.ppm_path.empty() &&
      o.csv_path.empty()) {
    throw UsageError("nothing to write: give --out, --data-out, --ppm-out or --raster-csv");
  }
  if (o.trail_encoding == "color") {
    o.spec.trail_encoding = TrailEncoding::kColor;
  } else if (o.trail_encoding == "linewidth") {
    o.spec.trail_encoding = TrailEncoding::kLineWidth;
  } else {
    throw UsageError("--trail-encoding must be color or linewidth");
  }
  if (o.threads < 1 || o.threads > 256) throw UsageError("--threads must be within [1, 256]");
  try {
    o.spec.Validate();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  CheckInputPath(o.op_path);
  CheckOutputPath(o.svg_path, "--out");
  CheckOutputPath(o.data_path, "--data-out");
  CheckOutputPath(o.ppm_path, "--ppm-out");
  CheckOutputPath(o.csv_path, "--raster-csv");

  ShOperator op = [&] {
    try {
      return ReadOperatorFile(o.op_path);
    } catch (const DimensionError& e) {
      throw IoError(e.what());
    }
  }();
  SphereGrid display = [&] {
    try {
      return BuiltinTDesignWithSize(o.spec.vector_grid_points);
    } catch (const ParameterError& e) {
      throw UsageError(std::string("--vec-grid: ") + e.what());
    }
  }();

  const ResponseField field =
      CharacterizeField(op, display, EquirectRaster(o.spec.raster_cell_deg),
                        DefaultQuadratureGrid(op.n_out()), o.threads);

  if (!o.svg_path.empty()) WriteSvg(field, o.spec, o.svg_path);
  if (!o.ppm_path.empty()) WritePpm(field, o.spec, o.ppm_path);
  if (!o.data_path.empty()) WriteFieldJson(field, o.data_path);
  if (!o.csv_path.empty()) WriteRasterCsv(field, o.csv_path);

  const auto [eta_lo, eta_hi] =
      std::minmax_element(field.raster_eta.begin(), field.raster_eta.end());
  double eta_min = *eta_lo;
  double eta_max = *eta_hi;
  for (double e : field.eta) {
    eta_min = std::min(eta_min, e);
    eta_max = std::max(eta_max, e);
  }
  const double re_peak = *std::max_element(field.re_norm.begin(), field.re_norm.end());
  const int red = static_cast<int>(BuildTrails(field, o.spec).size());

  char line[256];
  std::snprintf(line, sizeof(line),
                "n_in=%d n_out=%d eta_min=%.12f eta_max=%.12f re_max=%.3f "
                "re_bound=%.3f marks=%d/%d\n",
                field.n_in, field.n_out, eta_min, eta_max, re_peak, field.re_max,
                display.size(), red);
  out << line;
  return kExitOk;
}

int RunTable1(int max_order, std::ostream& out) {
  if (max_order < 1 || max_order > 20) {
    throw UsageError("--max-order must be within [1, 20]");
  }
  out << " N  N/(N+1)  rE_max\n";
  char line[64];
  for (int n = 1; n <= max_order; ++n) {
    std::snprintf(line, sizeof(line), "%2d  %7.3f  %6.3f\n", n, n / (n + 1.0),
                  ReMax(n));
    out << line;
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Characterize and render linear operators on spherical-harmonic coefficients"};
  app.name("shviz");
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an operator file");
  gen_cmd->add_option("kind", gen.kind, "Operator kind")
      ->required()
      ->check(CLI::IsMember(GenKinds()));
  gen_cmd->add_option("--order", gen.order, "Input SH order")->capture_default_str();
  gen_cmd->add_option("--out-order", gen.out_order, "Output SH order (warp)");
  gen_cmd->add_option("--axis", gen.axis, "Rotation axis x,y,z")->capture_default_str();
  gen_cmd->add_option("--angle-deg", gen.angle_deg, "Rotation angle in degrees")
      ->capture_default_str();
  gen_cmd->add_option("--alpha", gen.alpha, "Warp parameter in (-1, 1)")
      ->capture_default_str();
  gen_cmd->add_option("--preset", gen.preset, "Built-in scene (table2)");
  gen_cmd->add_option("--scene", gen.scene_path, "Scene JSON file");
  gen_cmd->add_option("--mu", gen.mu, "Noise-reduction trade-off (default 1)");
  gen_cmd->add_option("--snr-db", gen.snr_db, "Scene SNR in dB (default 0)");
  gen_cmd->add_option("--tol", gen.tol, "Quadrature convergence tolerance")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random kind")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out_path, "Operator JSON to write")->required();

  CharacterizeOptions ch;
  CLI::App* ch_cmd =
      app.add_subcommand("characterize", "Compute gain and energy-vector fields and render");
  ch_cmd->add_option("operator", ch.op_path, "Operator JSON file")->required();
  ch_cmd->add_option("--out", ch.svg_path, "SVG figure to write");
  ch_cmd->add_option("--data-out", ch.data_path, "Field JSON to write");
  ch_cmd->add_option("--ppm-out", ch.ppm_path, "Gain raster PPM to write");
  ch_cmd->add_option("--raster-csv", ch.csv_path, "Gain raster CSV to write");
  ch_cmd->add_flag("--gain-db", ch.spec.gain_db, "Show gain in dB");
  ch_cmd->add_option("--db-floor", ch.spec.gain_db_floor, "dB floor")
      ->capture_default_str();
  ch_cmd->add_option("--gain-min", ch.spec.gain_min, "Gain colour scale minimum");
  ch_cmd->add_option("--gain-max", ch.spec.gain_max, "Gain colour scale maximum");
  ch_cmd->add_flag("--re-normalize", ch.spec.re_normalize, "Divide |rE| by N/(N+1)");
  ch_cmd->add_option("--re-threshold", ch.spec.re_threshold, "Hide marks below this |rE|")
      ->capture_default_str();
  ch_cmd->add_option("--cell-deg", ch.spec.raster_cell_deg, "Gain raster cell size")
      ->capture_default_str();
  ch_cmd->add_option("--vec-grid", ch.spec.vector_grid_points, "Number of marks")
      ->capture_default_str();
  ch_cmd->add_option("--colormap", ch.spec.colormap, "viridis or coolwarm")
      ->capture_default_str();
  ch_cmd->add_option("--trail-encoding", ch.trail_encoding, "color or linewidth")
      ->capture_default_str();
  ch_cmd->add_option("--width", ch.spec.width_px, "SVG width")->capture_default_str();
  ch_cmd->add_option("--height", ch.spec.height_px, "SVG height")->capture_default_str();
  ch_cmd->add_option("--threads", ch.threads, "Worker threads")->capture_default_str();

  int max_order = 10;
  CLI::App* t1_cmd = app.add_subcommand("table1", "Print N/(N+1) and the |rE| bound");
  t1_cmd->add_option("--max-order", max_order, "Last order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen, out);
    if (*ch_cmd) return RunCharacterize(ch, out);
    return RunTable1(max_order, out);
  } catch (const UsageError& e) {
    err << "shviz: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "shviz: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "shviz: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "shviz: " << e.what() << "\n";
    return kExitCompute;
  }
}

}  // namespace shviz
