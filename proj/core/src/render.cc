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

#include "shviz/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "shviz/colormap.h"
#include "shviz/error.h"

namespace shviz {

namespace {

constexpr double kDeg = kPi / 180.0;
constexpr char kBlue[] = "#0000ff";
constexpr char kRed[] = "#ff0000";
constexpr int kColorbarSteps = 128;

// Fixed 3-decimal notation without a "-0.000".
std::string F3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

void WriteFile(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << bytes;
  if (!out) throw IoError("write failed: " + path.string());
}

const RasterLayout& RequireLayout(const ResponseField& field) {
  if (!field.raster.raster()) {
    throw ParameterError("render: field raster is not an equirectangular grid");
  }
  return *field.raster.raster();
}

// Reference |r_E| of the identity, N/(N+1) for the input order.
double IdentityRe(int n_in) { return n_in / (n_in + 1.0); }

double DisplayedRe(const ResponseField& field, const RenderSpec& spec, int q) {
  const double ref = IdentityRe(field.n_in);
  if (spec.re_normalize && ref > 0.0) return field.re_norm[q] / ref;
  return field.re_norm[q];
}

double ReBarMax(const ResponseField& field, const RenderSpec& spec) {
  if (spec.re_normalize) return 1.0;
  return field.re_max > 0.0 ? field.re_max : 1.0;
}

struct GainScale {
  double lo;
  double hi;
};

double GainValue(double eta, const RenderSpec& spec) {
  if (!spec.gain_db) return eta;
  if (!(eta > 0.0)) return spec.gain_db_floor;
  return std::max(20.0 * std::log10(eta), spec.gain_db_floor);
}

GainScale ComputeGainScale(const ResponseField& field, const RenderSpec& spec) {
  double max_value = spec.gain_db ? spec.gain_db_floor : 0.0;
  for (double eta : field.raster_eta) {
    max_value = std::max(max_value, GainValue(eta, spec));
  }
  GainScale s{spec.gain_db ? spec.gain_db_floor : 0.0, max_value};
  if (spec.gain_min) s.lo = *spec.gain_min;
  if (spec.gain_max) s.hi = *spec.gain_max;
  if (!(s.hi > s.lo)) s.hi = s.lo + 1.0;
  return s;
}

double LineWidthFor(double position) { return 0.5 + 3.0 * std::clamp(position, 0.0, 1.0); }

}  // namespace

void RenderSpec::Validate() const {
  if (!(raster_cell_deg >= 0.1 && raster_cell_deg <= 30.0)) {
    throw ParameterError("render: raster cell must be within [0.1, 30] degrees");
  }
  if (vector_grid_points < 1) throw ParameterError("render: empty vector grid");
  if (!(gain_db_floor < 0.0)) throw ParameterError("render: dB floor must be < 0");
  if (!(re_threshold >= 0.0 && re_threshold <= 1.0)) {
    throw ParameterError("render: |r_E| threshold must be within [0, 1]");
  }
  if (width_px < 320 || height_px < 120) {
    throw ParameterError("render: canvas must be at least 320x120 pixels");
  }
  ColormapLookup(colormap, 0.0);  // throws for unknown names
  if (gain_min && gain_max && !(*gain_max > *gain_min)) {
    throw ParameterError("render: gain scale needs max > min");
  }
}

Trail GreatCircleTrail(const Direction& from, const Direction& to, int steps) {
  if (steps < 2) throw ParameterError("trail: need at least 2 steps");
  Trail trail;
  trail.target = from;
  trail.excitation = to;
  const double delta = from.AngleTo(to);
  if (delta < 1e-9) {
    trail.points = {from};
    return trail;
  }
  if (kPi - delta < 1e-6) {
    throw DegeneratePathError("trail: endpoints are antipodal");
  }
  const double inv_sin = 1.0 / std::sin(delta);
  trail.points.reserve(steps);
  trail.points.push_back(from);
  for (int i = 1; i < steps - 1; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    const Eigen::Vector3d v = std::sin((1.0 - t) * delta) * inv_sin * from.vec() +
                              std::sin(t * delta) * inv_sin * to.vec();
    trail.points.push_back(Direction::FromCartesian(v));
  }
  trail.points.push_back(to);
  return trail;
}

int DefaultTrailSteps(double angle_rad) {
  return std::max(8, static_cast<int>(std::ceil(angle_rad / (2.0 * kDeg))));
}

PixelPoint ProjectEquirect(const Direction& s, const PlotArea& area) {
  return {area.left + (s.phi() + kPi) / (2.0 * kPi) * area.width,
          area.top + s.theta() / kPi * area.height};
}

std::vector<std::vector<PixelPoint>> ProjectPolyline(
    const std::vector<Direction>& points, const PlotArea& area) {
  std::vector<std::vector<PixelPoint>> pieces;
  for (size_t i = 0; i < points.size(); ++i) {
    if (i == 0 || std::abs(points[i].phi() - points[i - 1].phi()) > kPi) {
      pieces.emplace_back();
    }
    pieces.back().push_back(ProjectEquirect(points[i], area));
  }
  return pieces;
}

PlotArea SvgPlotArea(const RenderSpec& spec) {
  PlotArea area;
  area.left = 60.0;
  area.top = 30.0;
  double w = spec.width_px - area.left - 190.0;
  double h = spec.height_px - area.top - 40.0;
  if (w > 2.0 * h) {
    w = 2.0 * h;
  } else {
    h = w / 2.0;
  }
  area.width = w;
  area.height = h;
  return area;
}

std::vector<Trail> BuildTrails(const ResponseField& field,
                               const RenderSpec& spec) {
  std::vector<Trail> trails;
  for (int q = 0; q < field.display_grid.size(); ++q) {
    if (!field.re_defined[q]) continue;
    const double scalar = DisplayedRe(field, spec, q);
    if (scalar < spec.re_threshold) continue;
    const Direction& s = field.display_grid.point(q);
    const Direction& target = field.re_unit[q];
    Trail trail;
    try {
      trail = GreatCircleTrail(target, s, DefaultTrailSteps(target.AngleTo(s)));
    } catch (const DegeneratePathError&) {
      trail.target = target;
      trail.excitation = s;
    }
    trail.scalar = scalar;
    trails.push_back(std::move(trail));
  }
  return trails;
}

std::vector<double> GainScalePositions(const ResponseField& field,
                                       const RenderSpec& spec) {
  const GainScale scale = ComputeGainScale(field, spec);
  std::vector<double> pos(field.raster_eta.size());
  for (size_t i = 0; i < pos.size(); ++i) {
    pos[i] = std::clamp(
        (GainValue(field.raster_eta[i], spec) - scale.lo) / (scale.hi - scale.lo),
        0.0, 1.0);
  }
  return pos;
}

std::string RenderSvg(const ResponseField& field, const RenderSpec& spec) {
  spec.Validate();
  const RasterLayout& layout = RequireLayout(field);
  if (field.display_grid.size() != spec.vector_grid_points) {
    throw ParameterError("render: field has " +
                         std::to_string(field.display_grid.size()) +
                         " display directions, render settings ask for " +
                         std::to_string(spec.vector_grid_points));
  }
  const PlotArea area = SvgPlotArea(spec);
  const GainScale gain_scale = ComputeGainScale(field, spec);
  const std::vector<double> positions = GainScalePositions(field, spec);
  const double re_bar_max = ReBarMax(field, spec);

  std::string svg;
  svg.reserve(64 * field.raster.size() + 64 * 1024);
  auto add = [&svg](const std::string& s) { svg += s; };

  add("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
  add("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      std::to_string(spec.width_px) + "\" height=\"" +
      std::to_string(spec.height_px) + "\" viewBox=\"0 0 " +
      std::to_string(spec.width_px) + " " + std::to_string(spec.height_px) +
      "\" font-family=\"sans-serif\" font-size=\"11\">\n");
  add("<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width_px) +
      "\" height=\"" + std::to_string(spec.height_px) + "\" fill=\"#ffffff\"/>\n");

  // Gain map.
  const double cw = area.width / layout.cols;
  const double ch = area.height / layout.rows;
  add("<g id=\"gain-map\" shape-rendering=\"crispEdges\">\n");
  for (int r = 0; r < layout.rows; ++r) {
    for (int c = 0; c < layout.cols; ++c) {
      const int q = r * layout.cols + c;
      add("<rect x=\"" + F3(area.left + c * cw) + "\" y=\"" +
          F3(area.top + r * ch) + "\" width=\"" + F3(cw) + "\" height=\"" +
          F3(ch) + "\" fill=\"" +
          ToHex(ColormapLookup(spec.colormap, positions[q])) + "\"/>\n");
    }
  }
  add("</g>\n");

  // Frame and ticks every 45 degrees.
  add("<g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n");
  add("<rect x=\"" + F3(area.left) + "\" y=\"" + F3(area.top) + "\" width=\"" +
      F3(area.width) + "\" height=\"" + F3(area.height) + "\"/>\n");
  for (int deg = -180; deg <= 180; deg += 45) {
    const double x = area.left + (deg + 180.0) / 360.0 * area.width;
    const double y = area.top + area.height;
    add("<line x1=\"" + F3(x) + "\" y1=\"" + F3(y) + "\" x2=\"" + F3(x) +
        "\" y2=\"" + F3(y + 5.0) + "\"/>\n");
  }
  for (int deg = 0; deg <= 180; deg += 45) {
    const double y = area.top + deg / 180.0 * area.height;
    add("<line x1=\"" + F3(area.left - 5.0) + "\" y1=\"" + F3(y) + "\" x2=\"" +
        F3(area.left) + "\" y2=\"" + F3(y) + "\"/>\n");
  }
  add("</g>\n<g id=\"axis-labels\" fill=\"#000000\">\n");
  for (int deg = -180; deg <= 180; deg += 45) {
    const double x = area.left + (deg + 180.0) / 360.0 * area.width;
    add("<text x=\"" + F3(x) + "\" y=\"" + F3(area.top + area.height + 17.0) +
        "\" text-anchor=\"middle\">" + std::to_string(deg) + "</text>\n");
  }
  for (int deg = 0; deg <= 180; deg += 45) {
    const double y = area.top + deg / 180.0 * area.height;
    add("<text x=\"" + F3(area.left - 8.0) + "\" y=\"" + F3(y + 4.0) +
        "\" text-anchor=\"end\">" + std::to_string(deg) + "</text>\n");
  }
  add("<text x=\"" + F3(area.left + area.width / 2.0) + "\" y=\"" +
      F3(area.top + area.height + 33.0) +
      "\" text-anchor=\"middle\">azimuth phi (deg)</text>\n");
  add("<text x=\"14\" y=\"" + F3(area.top + area.height / 2.0) +
      "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
      F3(area.top + area.height / 2.0) + ")\">inclination theta (deg)</text>\n");
  add("</g>\n");

  // Trails.
  const std::vector<Trail> trails = BuildTrails(field, spec);
  add("<g id=\"trails\" fill=\"none\" stroke-linecap=\"round\" "
      "stroke-linejoin=\"round\">\n");
  for (const Trail& trail : trails) {
    if (trail.points.size() < 2) continue;
    const double pos = trail.scalar / re_bar_max;
    std::string stroke;
    std::string width;
    if (spec.trail_encoding == TrailEncoding::kColor) {
      stroke = ToHex(ColormapLookup(spec.colormap, pos));
      width = "1.500";
    } else {
      stroke = "#303030";
      width = F3(LineWidthFor(pos));
    }
    for (const auto& piece : ProjectPolyline(trail.points, area)) {
      if (piece.size() < 2) continue;
      std::string pts;
      for (const PixelPoint& p : piece) {
        if (!pts.empty()) pts += ' ';
        pts += F3(p.x) + "," + F3(p.y);
      }
      add("<polyline points=\"" + pts + "\" stroke=\"" + stroke +
          "\" stroke-width=\"" + width + "\"/>\n");
    }
  }
  add("</g>\n");

  // Marks: blue at every excitation, red at each drawn energy-vector target.
  add("<g id=\"marks\" stroke=\"none\">\n");
  for (int q = 0; q < field.display_grid.size(); ++q) {
    const PixelPoint p = ProjectEquirect(field.display_grid.point(q), area);
    add("<circle class=\"src\" cx=\"" + F3(p.x) + "\" cy=\"" + F3(p.y) +
        "\" r=\"2.500\" fill=\"" + kBlue + "\"/>\n");
  }
  for (const Trail& trail : trails) {
    const PixelPoint p = ProjectEquirect(trail.target, area);
    add("<circle class=\"dst\" cx=\"" + F3(p.x) + "\" cy=\"" + F3(p.y) +
        "\" r=\"2.000\" fill=\"" + kRed + "\"/>\n");
  }
  add("</g>\n");

  // Colour bars.
  const double bar_w = 16.0;
  const double bar_top = area.top;
  const double bar_h = area.height;
  auto colorbar = [&](const std::string& id, double x, const std::string& title,
                      double lo, double hi, bool as_widths) {
    add("<g id=\"" + id + "\">\n");
    const double step = bar_h / kColorbarSteps;
    for (int i = 0; i < kColorbarSteps; ++i) {
      const double pos = (i + 0.5) / kColorbarSteps;
      const double y = bar_top + bar_h - (i + 1) * step;
      if (as_widths) {
        const double lw = LineWidthFor(pos);
        add("<rect x=\"" + F3(x + (bar_w - lw) / 2.0) + "\" y=\"" + F3(y) +
            "\" width=\"" + F3(lw) + "\" height=\"" + F3(step) +
            "\" fill=\"#303030\"/>\n");
      } else {
        add("<rect x=\"" + F3(x) + "\" y=\"" + F3(y) + "\" width=\"" +
            F3(bar_w) + "\" height=\"" + F3(step) + "\" fill=\"" +
            ToHex(ColormapLookup(spec.colormap, pos)) +
            "\" shape-rendering=\"crispEdges\"/>\n");
      }
    }
    add("<rect x=\"" + F3(x) + "\" y=\"" + F3(bar_top) + "\" width=\"" +
        F3(bar_w) + "\" height=\"" + F3(bar_h) +
        "\" fill=\"none\" stroke=\"#000000\"/>\n");
    add("<text x=\"" + F3(x + bar_w + 4.0) + "\" y=\"" + F3(bar_top + 4.0) +
        "\">" + F3(hi) + "</text>\n");
    add("<text x=\"" + F3(x + bar_w + 4.0) + "\" y=\"" +
        F3(bar_top + bar_h + 4.0) + "\">" + F3(lo) + "</text>\n");
    add("<text x=\"" + F3(x) + "\" y=\"" + F3(bar_top - 10.0) + "\">" + title +
        "</text>\n");
    add("</g>\n");
  };
  const double bars_left = area.left + area.width + 30.0;
  colorbar("colorbar-gain", bars_left, spec.gain_db ? "eta (dB)" : "eta",
           gain_scale.lo, gain_scale.hi, false);
  colorbar("colorbar-re", bars_left + 85.0,
           spec.re_normalize ? "|rE| (N+1)/N" : "|rE|", 0.0, re_bar_max,
           spec.trail_encoding == TrailEncoding::kLineWidth);

  add("</svg>\n");
  return svg;
}

void WriteSvg(const ResponseField& field, const RenderSpec& spec,
              const std::filesystem::path& path) {
  WriteFile(path, RenderSvg(field, spec));
}

std::string RenderPpm(const ResponseField& field, const RenderSpec& spec) {
  spec.Validate();
  const RasterLayout& layout = RequireLayout(field);
  const std::vector<double> positions = GainScalePositions(field, spec);
  std::string out = "P6\n" + std::to_string(layout.cols) + " " +
                    std::to_string(layout.rows) + "\n255\n";
  out.reserve(out.size() + 3 * positions.size());
  for (double pos : positions) {
    const auto bytes = ToBytes(ColormapLookup(spec.colormap, pos));
    out.push_back(static_cast<char>(bytes[0]));
    out.push_back(static_cast<char>(bytes[1]));
    out.push_back(static_cast<char>(bytes[2]));
  }
  return out;
}

void WritePpm(const ResponseField& field, const RenderSpec& spec,
              const std::filesystem::path& path) {
  WriteFile(path, RenderPpm(field, spec));
}

}  // namespace shviz
