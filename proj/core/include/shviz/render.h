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

// Equirectangular rendering of a ResponseField.
//
// The background is the gain map, one coloured cell per raster point. On top,
// every display direction gets a blue mark at the excitation direction and a
// red mark at the energy-vector direction, joined by the great-circle arc
// between them; the arc carries |r_E| as colour or line width.
//
// Output is a pure function of (field, spec): fixed 3-decimal formatting, no
// timestamps, stable element order.

#ifndef SHVIZ_RENDER_H_
#define SHVIZ_RENDER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "shviz/characterize.h"
#include "shviz/direction.h"

namespace shviz {

enum class TrailEncoding { kColor, kLineWidth };

struct RenderSpec {
  double raster_cell_deg = 2.0;
  int vector_grid_points = 144;
  bool gain_db = false;
  double gain_db_floor = -40.0;
  // Divide |r_E| by N/(N+1) so the identity maps to 1.
  bool re_normalize = false;
  // Marks whose (possibly normalized) |r_E| is below this are not drawn.
  double re_threshold = 0.0;
  TrailEncoding trail_encoding = TrailEncoding::kColor;
  std::string colormap = "viridis";
  int width_px = 1000;
  int height_px = 445;
  // Gain colour-scale limits; unset means [0, max eta] (or [floor, max dB]).
  std::optional<double> gain_min;
  std::optional<double> gain_max;

  // Throws ParameterError on out-of-range fields.
  void Validate() const;
};

struct Trail {
  // Samples from the energy-vector direction (t = 0) to the excitation
  // direction (t = 1). A single point when the two coincide.
  std::vector<Direction> points;
  Direction excitation;
  Direction target;
  double scalar = 0.0;
};

// Slerp between `from` and `to` at `steps` uniform parameter values. Throws
// ParameterError for steps < 2 and DegeneratePathError when the endpoints are
// within 1e-6 rad of antipodal.
Trail GreatCircleTrail(const Direction& from, const Direction& to, int steps);

// max(8, ceil(angle / 2 deg)).
int DefaultTrailSteps(double angle_rad);

struct PlotArea {
  double left = 0.0;
  double top = 0.0;
  double width = 360.0;
  double height = 180.0;
};

struct PixelPoint {
  double x = 0.0;
  double y = 0.0;
};

// phi in (-pi, pi] maps left to right, theta in [0, pi] top to bottom.
PixelPoint ProjectEquirect(const Direction& s, const PlotArea& area);

// Projects a polyline, splitting it wherever consecutive azimuths jump by more
// than pi (the +-180 deg seam). No vertices are added or dropped.
std::vector<std::vector<PixelPoint>> ProjectPolyline(
    const std::vector<Direction>& points, const PlotArea& area);

// Plot rectangle used by RenderSvg for a given spec.
PlotArea SvgPlotArea(const RenderSpec& spec);

// Trails RenderSvg would draw, in display-grid order. Antipodal pairs have no
// unique arc and are returned with an empty polyline.
std::vector<Trail> BuildTrails(const ResponseField& field,
                               const RenderSpec& spec);

// Colour-scale position in [0, 1] of each raster cell.
std::vector<double> GainScalePositions(const ResponseField& field,
                                       const RenderSpec& spec);

std::string RenderSvg(const ResponseField& field, const RenderSpec& spec);
void WriteSvg(const ResponseField& field, const RenderSpec& spec,
              const std::filesystem::path& path);

// Binary PPM (P6) of the gain raster, one pixel per cell, first row at
// theta = 0. Throws ParameterError if the field raster has no layout.
std::string RenderPpm(const ResponseField& field, const RenderSpec& spec);
void WritePpm(const ResponseField& field, const RenderSpec& spec,
              const std::filesystem::path& path);

}  // namespace shviz

#endif  // SHVIZ_RENDER_H_
