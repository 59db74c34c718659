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

#ifndef SHVIZ_COLORMAP_H_
#define SHVIZ_COLORMAP_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shviz {

// Linear RGB components in [0, 1].
struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;
};

inline constexpr int kColormapSize = 256;

// "viridis" (sequential, monotone lightness) and "coolwarm" (diverging).
const std::vector<std::string>& ColormapNames();

// Entry `index` of the named table.
Rgb ColormapEntry(std::string_view name, int index);

// Linear interpolation at position value * 255; value is clamped to [0, 1]
// and NaN maps to 0. Throws ParameterError for an unknown name.
Rgb ColormapLookup(std::string_view name, double value);

// Rounded 8-bit channels.
std::array<std::uint8_t, 3> ToBytes(const Rgb& c);

// "#rrggbb".
std::string ToHex(const Rgb& c);

}  // namespace shviz

#endif  // SHVIZ_COLORMAP_H_
