// Copyright 2026 The dressgrade Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// 18-point body keypoints and the limb polylines built from them.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dressgrade {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Slot order of the keypoint file format (version 1). Do not reorder.
enum class Joint : std::size_t {
  Nose,
  Neck,
  RShoulder,
  RElbow,
  RWrist,
  LShoulder,
  LElbow,
  LWrist,
  RHip,
  RKnee,
  RAnkle,
  LHip,
  LKnee,
  LAnkle,
  REye,
  LEye,
  REar,
  LEar,
};

inline constexpr std::size_t kJointCount = 18;
inline constexpr int kKeypointFormatVersion = 1;

std::string_view joint_name(Joint j) noexcept;

enum class Side { Left, Right };

struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  double confidence = 0.0;  // 0 means missing

  bool present() const noexcept { return confidence > 0.0; }
  Point point() const noexcept { return {x, y}; }

  friend bool operator==(const Keypoint&, const Keypoint&) = default;
};

class KeypointSet {
 public:
  KeypointSet() = default;

  const Keypoint& operator[](Joint j) const noexcept { return slots_[static_cast<std::size_t>(j)]; }
  Keypoint& operator[](Joint j) noexcept { return slots_[static_cast<std::size_t>(j)]; }

  std::span<const Keypoint, kJointCount> slots() const noexcept { return slots_; }

  // Throws Error(MissingKeypoint) when the slot is missing.
  Point require(Joint j) const;

  // Every point scaled component-wise; confidences kept.
  KeypointSet scaled(double sx, double sy) const;

  // Points with confidence below `floor` become missing.
  KeypointSet with_confidence_floor(double floor) const;

  friend bool operator==(const KeypointSet&, const KeypointSet&) = default;

 private:
  std::array<Keypoint, kJointCount> slots_{};
};

struct ArmJoints {
  Joint shoulder, elbow, wrist;
};
struct LegJoints {
  Joint hip, knee, ankle;
};

ArmJoints arm_joints(Side side) noexcept;
LegJoints leg_joints(Side side) noexcept;

// Accepts {"keypoints": [[x, y, c] x 18]}. Throws Error(MalformedDocument) or
// Error(WrongArity).
KeypointSet parse_keypoints(std::string_view document);
std::string serialize_keypoints(const KeypointSet& kp);

// Throws Error(MissingKeypoint) unless both are present.
Point midpoint(const Keypoint& a, const Keypoint& b);
Point midpoint(Point a, Point b) noexcept;

double distance(Point a, Point b) noexcept;

class Polyline {
 public:
  // Throws Error(DegenerateLimb) for < 2 vertices or repeated consecutive vertices.
  explicit Polyline(std::vector<Point> vertices);

  std::span<const Point> vertices() const noexcept { return vertices_; }
  // Arc length at each vertex; starts at 0, strictly increasing.
  std::span<const double> cumulative() const noexcept { return cumulative_; }
  double length() const noexcept { return cumulative_.back(); }

  Point at(double s) const;

 private:
  std::vector<Point> vertices_;
  std::vector<double> cumulative_;
};

// Arc length of the closest point on the polyline to p; each segment uses the
// clamped perpendicular foot, ties resolve to the smaller arc length.
double arc_length_position(const Polyline& line, Point p);

// Shortest distance from p to the polyline.
double distance_to(const Polyline& line, Point p);

}  // namespace dressgrade
