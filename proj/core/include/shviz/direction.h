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

#ifndef SHVIZ_DIRECTION_H_
#define SHVIZ_DIRECTION_H_

#include <Eigen/Core>

namespace shviz {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kFourPi = 4.0 * kPi;

// Below this sin(inclination) a direction is treated as a pole and its
// azimuth is reported as 0.
inline constexpr double kPoleSinThreshold = 1e-12;

// A point on the unit sphere.
//
// Spherical coordinates follow the usual physics convention: inclination
// theta in [0, pi] measured from +z, azimuth phi in (-pi, pi] measured from
// +x towards +y.
class Direction {
 public:
  // +z.
  Direction() : v_(0.0, 0.0, 1.0) {}

  // Normalizes `v`. Throws DomainError for a zero or non-finite vector.
  static Direction FromCartesian(const Eigen::Vector3d& v);
  static Direction FromCartesian(double x, double y, double z) {
    return FromCartesian(Eigen::Vector3d(x, y, z));
  }
  static Direction FromSpherical(double theta, double phi);

  const Eigen::Vector3d& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }

  double theta() const;
  double phi() const;

  Direction operator-() const { return Direction(-v_); }

  // Great-circle angle to `other`, in radians.
  double AngleTo(const Direction& other) const;

 private:
  explicit Direction(const Eigen::Vector3d& unit) : v_(unit) {}

  Eigen::Vector3d v_;
};

}  // namespace shviz

#endif  // SHVIZ_DIRECTION_H_
