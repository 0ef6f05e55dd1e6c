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

#include "dressgrade/classify.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <optional>

#include "dressgrade/error.hpp"
#include "dressgrade/kernels/kernels.hpp"

namespace dressgrade {

void Thresholds::validate() const {
  for (std::size_t i = 0; i + 1 < hem_length_edges.size(); ++i) {
    if (!(hem_length_edges[i] > hem_length_edges[i + 1])) {
      throw Error(ErrorCode::InvalidConfig, "hem_length_edges must be strictly decreasing");
    }
  }
  if (!(hem_length_edges.back() > 0.0)) throw Error(ErrorCode::InvalidConfig, "hem_length_edges must be positive");
  const bool ok = sleeve_tolerance_px >= 0 && hem_end_tolerance_px >= 0 && hem_asymmetry_gap_px >= 0 &&
                  aline_width_px >= 0 && end_band_half_width_px >= 0 && arm_search_radius_px >= 0;
  if (!ok) throw Error(ErrorCode::InvalidConfig, "pixel tolerances must be non-negative");
}

Thresholds thresholds_from_json(std::string_view json_text, Thresholds base) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidConfig, "thresholds must be a JSON object");
  try {
    if (doc.contains("hem_length_edges")) {
      const auto& edges = doc["hem_length_edges"];
      if (!edges.is_array() || edges.size() != base.hem_length_edges.size()) {
        throw Error(ErrorCode::InvalidConfig, "hem_length_edges must hold 9 numbers");
      }
      for (std::size_t i = 0; i < edges.size(); ++i) base.hem_length_edges[i] = edges[i].get<double>();
    }
    auto read = [&](const char* key, auto& field) {
      if (doc.contains(key)) field = doc[key].get<std::remove_reference_t<decltype(field)>>();
    };
    read("sleeve_tolerance_px", base.sleeve_tolerance_px);
    read("hem_end_tolerance_px", base.hem_end_tolerance_px);
    read("hem_asymmetry_gap_px", base.hem_asymmetry_gap_px);
    read("aline_width_px", base.aline_width_px);
    read("end_band_half_width_px", base.end_band_half_width_px);
    read("arm_search_radius_px", base.arm_search_radius_px);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  base.validate();
  return base;
}

std::string thresholds_to_json(const Thresholds& t) {
  nlohmann::ordered_json doc;
  doc["hem_length_edges"] = t.hem_length_edges;
  doc["sleeve_tolerance_px"] = t.sleeve_tolerance_px;
  doc["hem_end_tolerance_px"] = t.hem_end_tolerance_px;
  doc["hem_asymmetry_gap_px"] = t.hem_asymmetry_gap_px;
  doc["aline_width_px"] = t.aline_width_px;
  doc["end_band_half_width_px"] = t.end_band_half_width_px;
  doc["arm_search_radius_px"] = t.arm_search_radius_px;
  return doc.dump(2);
}

int locate_dress_end(const SceneAnnotation& scene) { return scene.box.y_max; }

double hem_ratio(const SceneAnnotation& scene) {
  const auto& kp = scene.keypoints;
  const double hip_y = (kp.require(Joint::LHip).y + kp.require(Joint::RHip).y) / 2.0;

  std::optional<double> ankle_y;
  for (Joint j : {Joint::LAnkle, Joint::RAnkle}) {
    if (kp[j].present()) ankle_y = std::max(ankle_y.value_or(kp[j].y), kp[j].y);
  }
  if (!ankle_y) throw Error(ErrorCode::MissingKeypoint, "both ankles missing");

  const double leg = *ankle_y - hip_y;
  if (!(leg > 0.0)) throw Error(ErrorCode::DegenerateLegs, "ankle is not below the hip");
  const double hem = std::max(0.0, static_cast<double>(locate_dress_end(scene)) - hip_y);
  return hem / leg;
}

Classified<HemLength> classify_hem_length(double h, const Thresholds& t) {
  using C = Classified<HemLength>;
  if (!std::isfinite(h)) return C::unclassified(Reason::NonFiniteRatio);
  if (h < 0.0) return C::unclassified(Reason::NoBandMatched);
  const auto& e = t.hem_length_edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (h >= e[i]) return static_cast<HemLength>(i);
  }
  return HemLength::Micro;
}

ArmReading locate_sleeve_end(const SceneAnnotation& scene, Side side, const Thresholds& t) {
  const ArmJoints arm = arm_joints(side);
  const Point shoulder = scene.keypoints.require(arm.shoulder);
  const Point elbow = scene.keypoints.require(arm.elbow);
  const Point wrist = scene.keypoints.require(arm.wrist);
  const Polyline line({shoulder, elbow, wrist});

  ArmReading reading;
  reading.positions.shoulder = 0.0;
  reading.positions.shoulder_elbow = arc_length_position(line, midpoint(shoulder, elbow));
  reading.positions.elbow = line.cumulative()[1];
  reading.positions.elbow_wrist = arc_length_position(line, midpoint(elbow, wrist));
  reading.positions.wrist = line.length();

  kernels::SegmentTable segs;
  const auto v = line.vertices();
  const auto cum = line.cumulative();
  segs.count = v.size() - 1;
  for (std::size_t k = 0; k < segs.count; ++k) {
    segs.ax[k] = static_cast<float>(v[k].x);
    segs.ay[k] = static_cast<float>(v[k].y);
    segs.dx[k] = static_cast<float>(v[k + 1].x - v[k].x);
    segs.dy[k] = static_cast<float>(v[k + 1].y - v[k].y);
    segs.len_sq[k] = segs.dx[k] * segs.dx[k] + segs.dy[k] * segs.dy[k];
    segs.len[k] = static_cast<float>(cum[k + 1] - cum[k]);
    segs.cum[k] = static_cast<float>(cum[k]);
  }

  const double r = t.arm_search_radius_px;
  double lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (const Point& p : v) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const BinaryMask& mask = scene.mask;
  const int x0 = std::max(0, static_cast<int>(std::floor(lo_x - r)));
  const int x1 = std::min(mask.width(), static_cast<int>(std::ceil(hi_x + r)) + 1);
  const int y0 = std::max(0, static_cast<int>(std::floor(lo_y - r)));
  const int y1 = std::min(mask.height(), static_cast<int>(std::ceil(hi_y + r)) + 1);

  const auto& k = kernels::active();
  const auto r2 = static_cast<float>(r * r);
  float reach = -1.0f;
  for (int y = y0; y < y1 && x0 < x1; ++y) {
    reach = std::max(reach, k.max_reach(mask.row(y), x0, x1, static_cast<float>(y), segs, r2));
  }
  reading.sleeve_end = reach < 0.0f ? 0.0 : static_cast<double>(reach);
  return reading;
}

Classified<SleeveLength> classify_sleeve_one_arm(double e, const ArmPositions& arm, double tol) {
  if (e > arm.elbow_wrist + tol) return SleeveLength::Long;
  if (arm.elbow_wrist - tol < e && e <= arm.elbow_wrist + tol) return SleeveLength::Bracelet;
  if (arm.elbow - tol < e && e <= arm.elbow + tol) return SleeveLength::Elbow;
  if (arm.shoulder_elbow - tol < e && e <= arm.shoulder_elbow + tol) return SleeveLength::Short;
  if (e <= arm.shoulder + tol) return SleeveLength::Cap;
  return Classified<SleeveLength>::unclassified(Reason::NoBandMatched);
}

Classified<SleeveLength> classify_sleeve(const SceneAnnotation& scene, const Thresholds& t) {
  std::optional<Classified<SleeveLength>> per_arm[2];
  bool degenerate = false;
  for (Side side : {Side::Left, Side::Right}) {
    try {
      const ArmReading r = locate_sleeve_end(scene, side, t);
      per_arm[side == Side::Left ? 0 : 1] = classify_sleeve_one_arm(r.sleeve_end, r.positions, t.sleeve_tolerance_px);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateLimb) {
        degenerate = true;
      } else if (e.code() != ErrorCode::MissingKeypoint) {
        throw;
      }
    }
  }
  if (!per_arm[0] && !per_arm[1]) {
    if (degenerate) throw Error(ErrorCode::DegenerateLimb, "no usable arm polyline");
    throw Error(ErrorCode::MissingKeypoint, "no complete shoulder-elbow-wrist chain");
  }
  std::optional<SleeveLength> best;
  for (const auto& c : per_arm) {
    if (c && c->has_value()) best = best ? std::min(*best, c->value()) : c->value();
  }
  if (best) return *best;
  return Classified<SleeveLength>::unclassified(Reason::NoBandMatched);
}

HemEnds locate_hem_ends(const SceneAnnotation& scene, const Thresholds& t) {
  auto end_for = [&](Side side) {
    const LegJoints leg = leg_joints(side);
    const Keypoint& ankle = scene.keypoints[leg.ankle];
    const Keypoint& knee = scene.keypoints[leg.knee];
    if (!ankle.present() && !knee.present()) {
      throw Error(ErrorCode::MissingKeypoint, std::string(side == Side::Left ? "left" : "right") + " knee and ankle");
    }
    const double x = ankle.present() ? ankle.x : knee.x;
    try {
      return lowest_on_y_in_band(scene.mask, static_cast<int>(std::lround(x)), t.end_band_half_width_px);
    } catch (const Error& e) {
      throw Error(ErrorCode::HemEndNotFound, e.what());
    }
  };
  return HemEnds{end_for(Side::Left), end_for(Side::Right)};
}

Classified<HemType> classify_hem_type(double bottom, double left_end, double right_end, double box_width,
                                      const Thresholds& t) {
  const double tol = t.hem_end_tolerance_px;
  if (std::abs(bottom - left_end) <= tol || std::abs(bottom - right_end) <= tol) {
    if (std::abs(left_end - right_end) >= t.hem_asymmetry_gap_px) return HemType::Asymmetrical;
    return HemType::HighLow;
  }
  if (box_width >= t.aline_width_px) return HemType::Aline;
  if (box_width < t.aline_width_px) return HemType::Straight;
  return Classified<HemType>::unclassified(Reason::NoBandMatched);
}

Classified<HemType> classify_hem_type(const SceneAnnotation& scene, HemEnds ends, const Thresholds& t) {
  return classify_hem_type(scene.box.y_max, ends.left, ends.right, scene.box.width(), t);
}

namespace {

Reason reason_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::MissingKeypoint: return Reason::MissingKeypoint;
    case ErrorCode::DegenerateLegs: return Reason::DegenerateLegs;
    case ErrorCode::DegenerateLimb: return Reason::DegenerateLimb;
    case ErrorCode::HemEndNotFound:
    case ErrorCode::NoPixelInBand: return Reason::HemEndNotFound;
    default: return Reason::NoBandMatched;
  }
}

}  // namespace

AttributeSet classify_all(const SceneAnnotation& scene, const Thresholds& t) {
  AttributeSet out;
  try {
    out.hem_ratio = hem_ratio(scene);
    out.hem_length = classify_hem_length(out.hem_ratio, t);
  } catch (const Error& e) {
    out.hem_length = Classified<HemLength>::unclassified(reason_for(e));
  }
  try {
    out.sleeve_length = classify_sleeve(scene, t);
  } catch (const Error& e) {
    out.sleeve_length = Classified<SleeveLength>::unclassified(reason_for(e));
  }
  try {
    out.hem_type = classify_hem_type(scene, locate_hem_ends(scene, t), t);
  } catch (const Error& e) {
    out.hem_type = Classified<HemType>::unclassified(reason_for(e));
  }
  return out;
}

}  // namespace dressgrade
