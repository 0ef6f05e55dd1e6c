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

// Procedural dressed figures with known attributes.
//
// A figure is a front-facing skeleton with both arms raised, so sleeves never
// reach the hem and the skirt never comes near an arm. The dress is one
// polygon (torso trapezoid into a skirt trapezoid) whose bottom edge follows
// one of three hem profiles, plus sleeve strips along the arm polylines.
// Ground truth is computed from these parameters, never from pixels.

#include <cstdint>
#include <optional>
#include <tuple>

#include "dressgrade/attributes.hpp"
#include "dressgrade/classify.hpp"
#include "dressgrade/keypoints.hpp"
#include "dressgrade/mask.hpp"

namespace dressgrade {

enum class HemShapeKind {
  Flat,            // level hem
  Stepped,         // one side lower by step_px; short transition at the centre
  DroppedCorners,  // level under the legs, outer corners hang corner_drop_px lower
};

struct HemShape {
  HemShapeKind kind = HemShapeKind::Flat;
  double step_px = 0.0;
  bool low_on_left = true;  // figure's left (image right) is the lower side
  double corner_drop_px = 0.0;
};

struct FigureSpec {
  int frame = kCanonicalSize;
  double center_x = 160.0;
  double shoulder_y = 102.0;
  double hip_y = 148.0;
  double leg_length = 138.0;            // hip to ankle
  double shoulder_half_width = 38.0;    // torso half-width at the shoulder line
  double waist_half_width = 22.0;
  double hip_half_width = 16.0;         // horizontal offset of each leg
  double upper_arm = 46.0;
  double forearm = 42.0;
  double arm_tilt_deg = 0.0;            // outward lean of the raised upper arm
  double elbow_bend_deg = 0.0;          // extra outward lean of the forearm
  double hem_ratio = 0.5;               // target hip-to-hem over hip-to-ankle
  double sleeve_fraction = 0.0;         // sleeve end as a fraction of arm arc length
  double hem_width = 120.0;             // skirt width at the hem
  HemShape hem;
  double margin = 0.5;                  // share of each band kept clear of its edges
  std::optional<double> occlusion_split;  // sever the dress at this share of its pixels
};

struct FigureTargets {
  HemLength hem_length;
  SleeveLength sleeve_length;
  HemType hem_type;

  friend bool operator==(const FigureTargets&, const FigureTargets&) = default;
};

// Decision variables of the three algorithms evaluated on the parameters.
struct AnalyticReadings {
  double hem_ratio = 0.0;
  double dress_end_y = 0.0;
  double left_hem_end_y = 0.0;
  double right_hem_end_y = 0.0;
  double box_width = 0.0;
  double sleeve_end = 0.0;
  ArmPositions arm;
};

AnalyticReadings analytic_readings(const FigureSpec& spec);
AttributeSet analytic_truth(const FigureSpec& spec, const Thresholds& t = {});

// Throws Error(InfeasibleSpec) when the figure leaves the frame or its
// polygon would self-intersect.
void validate_spec(const FigureSpec& spec);

// True when every decision variable sits at least margin/2 of its band width
// inside the band that produced the truth.
bool clears_margin(const FigureSpec& spec, double margin, const Thresholds& t = {});

struct Figure {
  LabelMap labels;
  KeypointSet keypoints;
  AttributeSet truth;
};

// The seed only drives keypoint confidences; geometry comes from `spec`.
Figure generate_figure(const FigureSpec& spec, std::uint64_t seed);

// Uniform over the parameter region whose analytic truth equals the targets.
// Throws Error(InfeasibleTarget) if no such spec is found.
FigureSpec sample_spec(const FigureTargets& targets, std::uint64_t seed, double margin = 0.5,
                       const Thresholds& t = {});

// Uniform over all 10 x 5 x 4 triples.
FigureTargets sample_targets(std::uint64_t seed);

// Deterministic per-figure seed derived from a run seed.
std::uint64_t figure_seed(std::uint64_t run_seed, std::uint64_t index);

}  // namespace dressgrade
