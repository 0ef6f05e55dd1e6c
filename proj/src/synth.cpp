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

#include "dressgrade/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dressgrade/error.hpp"

namespace dressgrade {
namespace {

constexpr double kStripHalfWidth = 4.0;
constexpr double kArmSkinHalfWidth = 5.0;
constexpr double kLegHalfWidth = 6.0;
constexpr double kShoeRadius = 5.0;
constexpr double kHeadRadius = 14.0;
constexpr double kStepHalfSpan = 2.0;
constexpr double kCornerRamp = 3.0;
constexpr double kFloorSpan = 0.1;      // hem ratio band above the floor-length edge
constexpr double kRaisedSpan = 20.0;    // hem-end rise band above the tolerance
constexpr double kStraightSpan = 40.0;  // width band under the A-line threshold
constexpr double kAlineSpan = 70.0;
constexpr int kOcclusionRows = 3;
constexpr int kSampleAttempts = 256;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }

struct Band {
  double lo;
  double hi;

  Band shrink(double margin) const {
    const double pad = margin * (hi - lo) / 2.0;
    return {lo + pad, hi - pad};
  }
  bool holds(double x) const { return x >= lo - 1e-9 && x <= hi + 1e-9; }
};

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

struct Skeleton {
  Point l_shoulder, l_elbow, l_wrist;
  Point r_shoulder, r_elbow, r_wrist;
  Point l_hip, l_knee, l_ankle;
  Point r_hip, r_knee, r_ankle;
  Point neck, nose, l_eye, r_eye, l_ear, r_ear;
  Point head;
};

Skeleton skeleton(const FigureSpec& s) {
  Skeleton k{};
  const double c = s.center_x;
  const double phi = radians(s.arm_tilt_deg);
  const double psi = radians(s.arm_tilt_deg + s.elbow_bend_deg);
  auto arm = [&](double sign, Point& sh, Point& el, Point& wr) {
    sh = {c + sign * s.shoulder_half_width, s.shoulder_y};
    el = {sh.x + sign * s.upper_arm * std::sin(phi), sh.y - s.upper_arm * std::cos(phi)};
    wr = {el.x + sign * s.forearm * std::sin(psi), el.y - s.forearm * std::cos(psi)};
  };
  arm(+1.0, k.l_shoulder, k.l_elbow, k.l_wrist);
  arm(-1.0, k.r_shoulder, k.r_elbow, k.r_wrist);
  auto leg = [&](double sign, Point& hip, Point& knee, Point& ankle) {
    const double x = c + sign * s.hip_half_width;
    hip = {x, s.hip_y};
    knee = {x, s.hip_y + s.leg_length / 2.0};
    ankle = {x, s.hip_y + s.leg_length};
  };
  leg(+1.0, k.l_hip, k.l_knee, k.l_ankle);
  leg(-1.0, k.r_hip, k.r_knee, k.r_ankle);
  k.neck = {c, s.shoulder_y};
  k.head = {c, s.shoulder_y - 22.0};
  k.nose = {c, s.shoulder_y - 20.0};
  k.l_eye = {c + 5.0, s.shoulder_y - 24.0};
  k.r_eye = {c - 5.0, s.shoulder_y - 24.0};
  k.l_ear = {c + 10.0, s.shoulder_y - 21.0};
  k.r_ear = {c - 10.0, s.shoulder_y - 21.0};
  return k;
}

double waist_y(const FigureSpec& s) { return s.shoulder_y + 0.55 * (s.hip_y - s.shoulder_y); }

double dress_end_y(const FigureSpec& s) { return s.hip_y + s.hem_ratio * s.leg_length; }

// Flat-hem half-width kept under each leg so the end band never sees a ramp.
double leg_clearance(const FigureSpec& s, const Thresholds& t) {
  return s.hip_half_width + t.end_band_half_width_px + 2.0;
}

// Hem level on each side of the centre line: {u > 0, u < 0}.
std::pair<double, double> hem_levels(const FigureSpec& s) {
  const double bottom = dress_end_y(s);
  switch (s.hem.kind) {
    case HemShapeKind::Flat:
      return {bottom, bottom};
    case HemShapeKind::Stepped: {
      const double high = bottom - s.hem.step_px;
      return s.hem.low_on_left ? std::pair{bottom, high} : std::pair{high, bottom};
    }
    case HemShapeKind::DroppedCorners:
      return {bottom - s.hem.corner_drop_px, bottom - s.hem.corner_drop_px};
  }
  return {bottom, bottom};
}

// Bottom edge from u = +W/2 to u = -W/2, offsets relative to the centre.
std::vector<Point> hem_profile(const FigureSpec& s, const Thresholds& t) {
  const double half = s.hem_width / 2.0;
  const double bottom = dress_end_y(s);
  const auto [pos, neg] = hem_levels(s);
  switch (s.hem.kind) {
    case HemShapeKind::Flat:
      return {{half, bottom}, {-half, bottom}};
    case HemShapeKind::Stepped:
      return {{half, pos}, {kStepHalfSpan, pos}, {-kStepHalfSpan, neg}, {-half, neg}};
    case HemShapeKind::DroppedCorners: {
      const double q = leg_clearance(s, t);
      return {{half, bottom}, {q + kCornerRamp, bottom}, {q, pos},
              {-q, pos},      {-q - kCornerRamp, bottom}, {-half, bottom}};
    }
  }
  return {};
}

std::vector<Point> dress_polygon(const FigureSpec& s, const Thresholds& t) {
  const double c = s.center_x;
  const auto profile = hem_profile(s, t);
  double top = profile.front().y;
  for (const Point& p : profile) top = std::min(top, p.y);
  const double half = s.hem_width / 2.0;
  const double wy = waist_y(s);
  std::vector<Point> poly{{c - s.shoulder_half_width, s.shoulder_y},
                          {c + s.shoulder_half_width, s.shoulder_y},
                          {c + s.waist_half_width, wy},
                          {c + half, top}};
  for (const Point& p : profile) poly.push_back({c + p.x, p.y});
  poly.push_back({c - half, top});
  poly.push_back({c - s.waist_half_width, wy});
  return poly;
}

// A pixel stands for the cell [y - 0.5, y + 0.5); it is inside when the
// polygon covers the cell's top edge at the column centre.
void fill_polygon(LabelMap& map, const std::vector<Point>& poly, LipClass cls) {
  std::vector<double> xs;
  for (int y = 0; y < map.height(); ++y) {
    const double ys = y - 0.5;
    xs.clear();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point a = poly[i];
      const Point b = poly[(i + 1) % poly.size()];
      if ((a.y <= ys && ys < b.y) || (b.y <= ys && ys < a.y)) {
        xs.push_back(a.x + (ys - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const int x0 = std::max(0, static_cast<int>(std::ceil(xs[i])));
      const int x1 = std::min(map.width() - 1, static_cast<int>(std::ceil(xs[i + 1])) - 1);
      for (int x = x0; x <= x1; ++x) map.set(x, y, cls);
    }
  }
}

struct PixelWindow {
  int x0, y0, x1, y1;
};

PixelWindow window_around(const std::vector<Point>& pts, double pad, const LabelMap& map) {
  double xl = pts.front().x, xh = xl, yl = pts.front().y, yh = yl;
  for (const Point& p : pts) {
    xl = std::min(xl, p.x);
    xh = std::max(xh, p.x);
    yl = std::min(yl, p.y);
    yh = std::max(yh, p.y);
  }
  return {std::max(0, static_cast<int>(std::floor(xl - pad))), std::max(0, static_cast<int>(std::floor(yl - pad))),
          std::min(map.width() - 1, static_cast<int>(std::ceil(xh + pad))),
          std::min(map.height() - 1, static_cast<int>(std::ceil(yh + pad)))};
}

void fill_capsule(LabelMap& map, const std::vector<Point>& pts, double radius, LipClass cls) {
  const Polyline line(pts);
  const PixelWindow w = window_around(pts, radius + 1.0, map);
  for (int y = w.y0; y <= w.y1; ++y) {
    for (int x = w.x0; x <= w.x1; ++x) {
      if (distance_to(line, {double(x), double(y)}) <= radius) map.set(x, y, cls);
    }
  }
}

void fill_disc(LabelMap& map, Point centre, double radius, LipClass cls) {
  const PixelWindow w = window_around({centre}, radius + 1.0, map);
  for (int y = w.y0; y <= w.y1; ++y) {
    for (int x = w.x0; x <= w.x1; ++x) {
      if (distance(centre, {double(x), double(y)}) <= radius) map.set(x, y, cls);
    }
  }
}

void fill_sleeve(LabelMap& map, const std::vector<Point>& arm, double sleeve_end) {
  const Polyline line(arm);
  const PixelWindow w = window_around(arm, kStripHalfWidth + 1.0, map);
  for (int y = w.y0; y <= w.y1; ++y) {
    for (int x = w.x0; x <= w.x1; ++x) {
      const Point p{double(x), double(y)};
      if (distance_to(line, p) <= kStripHalfWidth && arc_length_position(line, p) <= sleeve_end) {
        map.set(x, y, LipClass::Dress);
      }
    }
  }
}

// Repaints a few full rows of dress so that the parts above and below are no
// longer 4-connected.
void sever_dress(LabelMap& map, double split) {
  std::vector<std::size_t> per_row(static_cast<std::size_t>(map.height()), 0);
  std::size_t total = 0;
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (map.at(x, y) == LipClass::Dress) ++per_row[static_cast<std::size_t>(y)];
    }
    total += per_row[static_cast<std::size_t>(y)];
  }
  const double goal = split * static_cast<double>(total);
  std::size_t seen = 0;
  int row = map.height() - 1;
  for (int y = 0; y < map.height(); ++y) {
    if (static_cast<double>(seen) >= goal && per_row[static_cast<std::size_t>(y)] > 0) {
      row = y;
      break;
    }
    seen += per_row[static_cast<std::size_t>(y)];
  }
  for (int y = row; y < std::min(map.height(), row + kOcclusionRows); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (map.at(x, y) == LipClass::Dress) map.set(x, y, LipClass::LeftArm);
    }
  }
}

Band hem_length_band(HemLength v, const Thresholds& t) {
  const auto& e = t.hem_length_edges;
  const auto i = static_cast<std::size_t>(v);
  if (i == 0) return {e[0], e[0] + kFloorSpan};
  if (i == e.size()) return {0.0, e.back()};
  return {e[i], e[i - 1]};
}

Band sleeve_band(SleeveLength v, const ArmPositions& arm, double tol) {
  switch (v) {
    case SleeveLength::Long:
      return {arm.elbow_wrist + tol, arm.wrist};
    case SleeveLength::Bracelet:
      return {arm.elbow_wrist - tol, arm.elbow_wrist + tol};
    case SleeveLength::Elbow:
      return {arm.elbow - tol, arm.elbow + tol};
    case SleeveLength::Short:
      return {arm.shoulder_elbow - tol, arm.shoulder_elbow + tol};
    case SleeveLength::Cap:
      return {0.0, tol};
  }
  return {0.0, 0.0};
}

Band raised_band(const Thresholds& t) { return {t.hem_end_tolerance_px, t.hem_end_tolerance_px + kRaisedSpan}; }

Band gap_band(HemType v, const Thresholds& t) {
  return v == HemType::Asymmetrical ? Band{t.hem_asymmetry_gap_px, t.hem_asymmetry_gap_px + kRaisedSpan}
                                    : Band{0.0, t.hem_asymmetry_gap_px};
}

Band width_band(HemType v, const Thresholds& t) {
  return v == HemType::Aline ? Band{t.aline_width_px, t.aline_width_px + kAlineSpan}
                             : Band{t.aline_width_px - kStraightSpan, t.aline_width_px};
}

void infeasible(const char* what) { throw Error(ErrorCode::InfeasibleSpec, what); }

}  // namespace

AnalyticReadings analytic_readings(const FigureSpec& spec) {
  AnalyticReadings r;
  r.hem_ratio = spec.hem_ratio;
  r.dress_end_y = dress_end_y(spec);
  const auto [pos, neg] = hem_levels(spec);
  r.left_hem_end_y = pos;
  r.right_hem_end_y = neg;

  const double arm_length = spec.upper_arm + spec.forearm;
  r.arm = {0.0, spec.upper_arm / 2.0, spec.upper_arm, spec.upper_arm + spec.forearm / 2.0, arm_length};
  r.sleeve_end = spec.sleeve_fraction * arm_length;

  // Box edges are pixel centres, so a span of w covers w - 1 steps.
  double extent = std::max(spec.hem_width / 2.0, spec.shoulder_half_width);
  if (r.sleeve_end > 0.0) {
    const Skeleton k = skeleton(spec);
    const Polyline arm({k.l_shoulder, k.l_elbow, k.l_wrist});
    extent = std::max(extent, arm.at(r.sleeve_end).x - spec.center_x + kStripHalfWidth);
  }
  r.box_width = 2.0 * extent - 1.0;
  return r;
}

AttributeSet analytic_truth(const FigureSpec& spec, const Thresholds& t) {
  const AnalyticReadings r = analytic_readings(spec);
  AttributeSet truth;
  truth.hem_ratio = r.hem_ratio;
  truth.hem_length = classify_hem_length(r.hem_ratio, t);
  truth.sleeve_length = classify_sleeve_one_arm(r.sleeve_end, r.arm, t.sleeve_tolerance_px);
  truth.hem_type = classify_hem_type(r.dress_end_y, r.left_hem_end_y, r.right_hem_end_y, r.box_width, t);
  return truth;
}

void validate_spec(const FigureSpec& s) {
  const Thresholds t;
  const double frame = s.frame;
  if (s.frame < 64) infeasible("frame too small");
  if (!(s.leg_length > 0.0 && s.hip_y > s.shoulder_y && s.upper_arm > 0.0 && s.forearm > 0.0)) {
    infeasible("degenerate skeleton");
  }
  if (!(s.hem_ratio >= 0.0) || !(s.sleeve_fraction >= 0.0 && s.sleeve_fraction <= 1.0)) {
    infeasible("hem ratio or sleeve fraction out of range");
  }
  if (s.hem.step_px < 0.0 || s.hem.corner_drop_px < 0.0) infeasible("negative hem offset");
  if (!(s.waist_half_width > 0.0 && s.waist_half_width < s.shoulder_half_width)) {
    infeasible("waist must be narrower than the shoulders");
  }

  const Skeleton k = skeleton(s);
  for (const Point& p : {k.l_wrist, k.r_wrist, k.l_elbow, k.r_elbow}) {
    if (p.y - kArmSkinHalfWidth < 0.0 || p.x - kArmSkinHalfWidth < 0.0 || p.x + kArmSkinHalfWidth > frame - 1.0) {
      infeasible("arm leaves the frame");
    }
  }
  if (k.head.y - kHeadRadius < 0.0) infeasible("head leaves the frame");
  if (k.l_ankle.y + 2.0 * kShoeRadius > frame - 1.0) infeasible("feet leave the frame");
  if (dress_end_y(s) > frame - 2.0) infeasible("hem leaves the frame");
  const double half = s.hem_width / 2.0;
  if (s.center_x - half < 1.0 || s.center_x + half > frame - 2.0) infeasible("skirt leaves the frame");

  if (half < s.waist_half_width + 2.0) infeasible("skirt narrower than the waist");
  const double clearance = leg_clearance(s, t);
  const double needed = s.hem.kind == HemShapeKind::DroppedCorners ? clearance + kCornerRamp + 3.0 : clearance;
  if (half < needed) infeasible("skirt too narrow for the leg bands");
  const auto [pos, neg] = hem_levels(s);
  if (std::min(pos, neg) < waist_y(s) + 4.0) infeasible("hem rises above the waist");
}

bool clears_margin(const FigureSpec& spec, double margin, const Thresholds& t) {
  const AttributeSet truth = analytic_truth(spec, t);
  const AnalyticReadings r = analytic_readings(spec);
  if (!truth.hem_length || !truth.sleeve_length || !truth.hem_type) return false;
  if (!hem_length_band(*truth.hem_length, t).shrink(margin).holds(r.hem_ratio)) return false;
  if (!sleeve_band(*truth.sleeve_length, r.arm, t.sleeve_tolerance_px).shrink(margin).holds(r.sleeve_end)) {
    return false;
  }
  const double rise_l = r.dress_end_y - r.left_hem_end_y;
  const double rise_r = r.dress_end_y - r.right_hem_end_y;
  const Band raised = raised_band(t);
  const double pad = margin * t.hem_end_tolerance_px / 2.0;
  switch (*truth.hem_type) {
    case HemType::Aline:
    case HemType::Straight:
      return raised.shrink(margin).holds(rise_l) && raised.shrink(margin).holds(rise_r) &&
             width_band(*truth.hem_type, t).shrink(margin).holds(r.box_width);
    case HemType::HighLow:
    case HemType::Asymmetrical:
      return std::min(rise_l, rise_r) <= t.hem_end_tolerance_px - pad &&
             gap_band(*truth.hem_type, t).shrink(margin).holds(std::abs(r.left_hem_end_y - r.right_hem_end_y));
  }
  return false;
}

Figure generate_figure(const FigureSpec& spec, std::uint64_t seed) {
  validate_spec(spec);
  const Thresholds t;
  const Skeleton k = skeleton(spec);
  LabelMap map(spec.frame, spec.frame);

  fill_capsule(map, {k.l_hip, k.l_knee, k.l_ankle}, kLegHalfWidth, LipClass::LeftLeg);
  fill_capsule(map, {k.r_hip, k.r_knee, k.r_ankle}, kLegHalfWidth, LipClass::RightLeg);
  fill_disc(map, {k.l_ankle.x, k.l_ankle.y + kShoeRadius}, kShoeRadius, LipClass::LeftShoe);
  fill_disc(map, {k.r_ankle.x, k.r_ankle.y + kShoeRadius}, kShoeRadius, LipClass::RightShoe);
  fill_capsule(map, {k.l_shoulder, k.l_elbow, k.l_wrist}, kArmSkinHalfWidth, LipClass::LeftArm);
  fill_capsule(map, {k.r_shoulder, k.r_elbow, k.r_wrist}, kArmSkinHalfWidth, LipClass::RightArm);
  fill_capsule(map, {{spec.center_x, spec.shoulder_y - 10.0}, k.neck}, 5.0, LipClass::Face);
  fill_disc(map, k.head, kHeadRadius, LipClass::Face);
  for (int y = 0; y < static_cast<int>(k.head.y - 6.0); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (map.at(x, y) == LipClass::Face && distance(k.head, {double(x), double(y)}) <= kHeadRadius) {
        map.set(x, y, LipClass::Hair);
      }
    }
  }

  fill_polygon(map, dress_polygon(spec, t), LipClass::Dress);
  const double sleeve_end = spec.sleeve_fraction * (spec.upper_arm + spec.forearm);
  if (sleeve_end > 0.0) {
    fill_sleeve(map, {k.l_shoulder, k.l_elbow, k.l_wrist}, sleeve_end);
    fill_sleeve(map, {k.r_shoulder, k.r_elbow, k.r_wrist}, sleeve_end);
  }
  if (spec.occlusion_split) sever_dress(map, *spec.occlusion_split);

  KeypointSet kp;
  std::mt19937_64 rng(seed);
  auto put = [&](Joint j, Point p) { kp[j] = {p.x, p.y, uniform(rng, 0.80, 0.99)}; };
  put(Joint::Nose, k.nose);
  put(Joint::Neck, k.neck);
  put(Joint::RShoulder, k.r_shoulder);
  put(Joint::RElbow, k.r_elbow);
  put(Joint::RWrist, k.r_wrist);
  put(Joint::LShoulder, k.l_shoulder);
  put(Joint::LElbow, k.l_elbow);
  put(Joint::LWrist, k.l_wrist);
  put(Joint::RHip, k.r_hip);
  put(Joint::RKnee, k.r_knee);
  put(Joint::RAnkle, k.r_ankle);
  put(Joint::LHip, k.l_hip);
  put(Joint::LKnee, k.l_knee);
  put(Joint::LAnkle, k.l_ankle);
  put(Joint::REye, k.r_eye);
  put(Joint::LEye, k.l_eye);
  put(Joint::REar, k.r_ear);
  put(Joint::LEar, k.l_ear);

  return {std::move(map), kp, analytic_truth(spec, t)};
}

FigureSpec sample_spec(const FigureTargets& targets, std::uint64_t seed, double margin, const Thresholds& t) {
  if (!(margin >= 0.0 && margin < 1.0)) throw Error(ErrorCode::InfeasibleTarget, "margin must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  const bool straight = targets.hem_type == HemType::Straight;

  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    FigureSpec s;
    s.margin = margin;
    s.center_x = uniform(rng, 156.0, 164.0);
    s.shoulder_y = uniform(rng, 100.0, 104.0);
    s.hip_y = s.shoulder_y + uniform(rng, 44.0, 48.0);
    s.leg_length = uniform(rng, 132.0, 142.0);
    s.shoulder_half_width = straight ? uniform(rng, 34.0, 38.0) : uniform(rng, 34.0, 44.0);
    s.waist_half_width = uniform(rng, 20.0, 24.0);
    s.hip_half_width = uniform(rng, 14.0, 18.0);
    s.upper_arm = uniform(rng, 44.0, 48.0);
    s.forearm = uniform(rng, 40.0, 44.0);
    s.arm_tilt_deg = straight ? uniform(rng, 0.0, 2.0) : uniform(rng, 0.0, 6.0);
    s.elbow_bend_deg = uniform(rng, 0.0, 3.0);

    const Band h = hem_length_band(targets.hem_length, t).shrink(margin);
    s.hem_ratio = uniform(rng, h.lo, h.hi);

    const ArmPositions arm{0.0, s.upper_arm / 2.0, s.upper_arm, s.upper_arm + s.forearm / 2.0,
                           s.upper_arm + s.forearm};
    const Band e = sleeve_band(targets.sleeve_length, arm, t.sleeve_tolerance_px).shrink(margin);
    s.sleeve_fraction = uniform(rng, e.lo, e.hi) / arm.wrist;

    switch (targets.hem_type) {
      case HemType::Aline:
      case HemType::Straight: {
        const Band d = raised_band(t).shrink(margin);
        const Band w = width_band(targets.hem_type, t).shrink(margin);
        s.hem.kind = HemShapeKind::DroppedCorners;
        s.hem.corner_drop_px = uniform(rng, d.lo, d.hi);
        // The box can be wider than the skirt; aim the skirt a pixel inside.
        s.hem_width = uniform(rng, w.lo, w.hi) + 1.0;
        break;
      }
      case HemType::HighLow:
      case HemType::Asymmetrical: {
        const Band g = gap_band(targets.hem_type, t).shrink(margin);
        s.hem.kind = HemShapeKind::Stepped;
        s.hem.step_px = uniform(rng, g.lo, g.hi);
        s.hem.low_on_left = unit(rng) < 0.5;
        s.hem_width = uniform(rng, 80.0, 170.0);
        break;
      }
    }

    try {
      validate_spec(s);
    } catch (const Error&) {
      continue;
    }
    const AttributeSet truth = analytic_truth(s, t);
    if (!(truth.hem_length == targets.hem_length && truth.sleeve_length == targets.sleeve_length &&
          truth.hem_type == targets.hem_type)) {
      continue;
    }
    if (!clears_margin(s, margin, t)) continue;
    return s;
  }
  throw Error(ErrorCode::InfeasibleTarget, "no figure found for " + describe(AttributeSet{
                                                targets.hem_length, targets.sleeve_length, targets.hem_type}));
}

FigureTargets sample_targets(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(unit(rng) * static_cast<double>(n)); };
  return {static_cast<HemLength>(pick(AttributeTraits<HemLength>::count)),
          static_cast<SleeveLength>(pick(AttributeTraits<SleeveLength>::count)),
          static_cast<HemType>(pick(AttributeTraits<HemType>::count))};
}

std::uint64_t figure_seed(std::uint64_t run_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(run_seed), static_cast<std::uint32_t>(run_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace dressgrade
