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

// Rule-based attribute classification over a fused scene: hem length from the
// hip-to-hem / hip-to-ankle ratio, sleeve length from the sleeve end along the
// arm, and hem type from the hem ends under each leg and the box width.

#include <array>
#include <string>
#include <utility>

#include "dressgrade/attributes.hpp"
#include "dressgrade/keypoints.hpp"
#include "dressgrade/mask.hpp"

namespace dressgrade {

struct Thresholds {
  // Lower edges of FloorLength .. Mini; Micro covers [0, last).
  std::array<double, 9> hem_length_edges{1.05, 0.9, 0.75, 0.675, 0.6, 0.515, 0.475, 0.375, 0.3};
  double sleeve_tolerance_px = 5.0;
  double hem_end_tolerance_px = 5.0;
  double hem_asymmetry_gap_px = 5.0;
  double aline_width_px = 110.0;
  int end_band_half_width_px = 10;
  double arm_search_radius_px = 12.0;

  // Throws Error(InvalidConfig) on non-decreasing edges or negative tolerances.
  void validate() const;
};

// Applies the keys present in a JSON object over `base`.
Thresholds thresholds_from_json(std::string_view json_text, Thresholds base = {});
std::string thresholds_to_json(const Thresholds& t);

struct SceneAnnotation {
  BinaryMask mask;  // dress, largest component, canonical frame
  BoundingBox box;
  KeypointSet keypoints;
};

int locate_dress_end(const SceneAnnotation& scene);

// (dress_end_y - hip_y) / (ankle_y - hip_y), numerator clamped at 0. The hip
// reference is the mid-hip, the ankle reference the lower present ankle.
// Throws Error(MissingKeypoint) or Error(DegenerateLegs).
double hem_ratio(const SceneAnnotation& scene);

Classified<HemLength> classify_hem_length(double h, const Thresholds& t = {});

// Arc-length coordinates along shoulder -> elbow -> wrist.
struct ArmPositions {
  double shoulder = 0.0;
  double shoulder_elbow = 0.0;
  double elbow = 0.0;
  double elbow_wrist = 0.0;
  double wrist = 0.0;
};

struct ArmReading {
  double sleeve_end = 0.0;
  ArmPositions positions;
};

// Throws Error(MissingKeypoint) or Error(DegenerateLimb).
ArmReading locate_sleeve_end(const SceneAnnotation& scene, Side side, const Thresholds& t = {});

Classified<SleeveLength> classify_sleeve_one_arm(double sleeve_end, const ArmPositions& arm, double tolerance);

// Both arms are classified; the longer class wins on disagreement.
// Throws Error(MissingKeypoint) when no complete arm exists.
Classified<SleeveLength> classify_sleeve(const SceneAnnotation& scene, const Thresholds& t = {});

struct HemEnds {
  int left = 0;
  int right = 0;
};

// Throws Error(MissingKeypoint) or Error(HemEndNotFound).
HemEnds locate_hem_ends(const SceneAnnotation& scene, const Thresholds& t = {});

Classified<HemType> classify_hem_type(double bottom, double left_end, double right_end, double box_width,
                                      const Thresholds& t = {});
Classified<HemType> classify_hem_type(const SceneAnnotation& scene, HemEnds ends, const Thresholds& t = {});

// Never throws; a failing phase becomes Unclassified with its reason.
AttributeSet classify_all(const SceneAnnotation& scene, const Thresholds& t = {});

}  // namespace dressgrade
