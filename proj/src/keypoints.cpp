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

#include "dressgrade/keypoints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <json.hpp>

#include "dressgrade/error.hpp"

namespace dressgrade {

namespace {

constexpr std::array<std::string_view, kJointCount> kJointNames{
    "nose",    "neck",   "r_shoulder", "r_elbow", "r_wrist", "l_shoulder", "l_elbow", "l_wrist", "r_hip",
    "r_knee",  "r_ankle", "l_hip",     "l_knee",  "l_ankle", "r_eye",      "l_eye",   "r_ear",   "l_ear",
};

struct Foot {
  double d2;
  double s;
};

Foot project(Point a, Point b, double cum, double cum_next, Point p) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len_sq = dx * dx + dy * dy;
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  const double cx = p.x - (a.x + t * dx);
  const double cy = p.y - (a.y + t * dy);
  // Rounding in cum + t * len must not step past the next vertex.
  return {cx * cx + cy * cy, std::min(cum + t * std::sqrt(len_sq), cum_next)};
}

Foot closest(const Polyline& line, Point p) {
  const auto v = line.vertices();
  const auto cum = line.cumulative();
  Foot best{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const Foot f = project(v[k], v[k + 1], cum[k], cum[k + 1], p);
    if (f.d2 < best.d2 || (f.d2 == best.d2 && f.s < best.s)) best = f;
  }
  return best;
}

}  // namespace

std::string_view joint_name(Joint j) noexcept { return kJointNames[static_cast<std::size_t>(j)]; }

Point KeypointSet::require(Joint j) const {
  const Keypoint& k = (*this)[j];
  if (!k.present()) throw Error(ErrorCode::MissingKeypoint, std::string(joint_name(j)));
  return k.point();
}

KeypointSet KeypointSet::scaled(double sx, double sy) const {
  KeypointSet out = *this;
  for (auto& k : out.slots_) {
    k.x *= sx;
    k.y *= sy;
  }
  return out;
}

KeypointSet KeypointSet::with_confidence_floor(double floor) const {
  KeypointSet out = *this;
  for (auto& k : out.slots_) {
    if (k.confidence < floor) k.confidence = 0.0;
  }
  return out;
}

ArmJoints arm_joints(Side side) noexcept {
  return side == Side::Left ? ArmJoints{Joint::LShoulder, Joint::LElbow, Joint::LWrist}
                            : ArmJoints{Joint::RShoulder, Joint::RElbow, Joint::RWrist};
}

LegJoints leg_joints(Side side) noexcept {
  return side == Side::Left ? LegJoints{Joint::LHip, Joint::LKnee, Joint::LAnkle}
                            : LegJoints{Joint::RHip, Joint::RKnee, Joint::RAnkle};
}

KeypointSet parse_keypoints(std::string_view document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object() || !doc.contains("keypoints") || !doc["keypoints"].is_array()) {
    throw Error(ErrorCode::MalformedDocument, "expected an object with a \"keypoints\" array");
  }
  if (!doc.contains("version") || doc["version"] != kKeypointFormatVersion) {
    throw Error(ErrorCode::MalformedDocument, "expected \"version\": " + std::to_string(kKeypointFormatVersion));
  }
  const json& arr = doc["keypoints"];
  if (arr.size() != kJointCount) {
    throw Error(ErrorCode::WrongArity, "expected 18 keypoints, got " + std::to_string(arr.size()));
  }
  KeypointSet kp;
  for (std::size_t i = 0; i < kJointCount; ++i) {
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 3 || !e[0].is_number() || !e[1].is_number() || !e[2].is_number()) {
      throw Error(ErrorCode::MalformedDocument, "keypoint " + std::to_string(i) + " is not [x, y, confidence]");
    }
    Keypoint k{e[0].get<double>(), e[1].get<double>(), e[2].get<double>()};
    if (!std::isfinite(k.x) || !std::isfinite(k.y) || !(k.confidence >= 0.0 && k.confidence <= 1.0)) {
      throw Error(ErrorCode::MalformedDocument, "keypoint " + std::to_string(i) + " out of range");
    }
    kp[static_cast<Joint>(i)] = k;
  }
  return kp;
}

std::string serialize_keypoints(const KeypointSet& kp) {
  nlohmann::ordered_json doc;
  doc["version"] = kKeypointFormatVersion;
  auto& arr = doc["keypoints"] = nlohmann::ordered_json::array();
  for (const Keypoint& k : kp.slots()) arr.push_back({k.x, k.y, k.confidence});
  return doc.dump();
}

Point midpoint(Point a, Point b) noexcept { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }

Point midpoint(const Keypoint& a, const Keypoint& b) {
  if (!a.present() || !b.present()) throw Error(ErrorCode::MissingKeypoint, "midpoint of a missing keypoint");
  return midpoint(a.point(), b.point());
}

double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

Polyline::Polyline(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw Error(ErrorCode::DegenerateLimb, "polyline needs at least two vertices");
  cumulative_.reserve(vertices_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const double d = distance(vertices_[i - 1], vertices_[i]);
    if (!(d > 0.0)) throw Error(ErrorCode::DegenerateLimb, "repeated polyline vertex");
    cumulative_.push_back(cumulative_.back() + d);
  }
}

Point Polyline::at(double s) const {
  s = std::clamp(s, 0.0, length());
  for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
    if (s <= cumulative_[k + 1] || k + 2 == vertices_.size()) {
      const double t = (s - cumulative_[k]) / (cumulative_[k + 1] - cumulative_[k]);
      return {vertices_[k].x + t * (vertices_[k + 1].x - vertices_[k].x),
              vertices_[k].y + t * (vertices_[k + 1].y - vertices_[k].y)};
    }
  }
  return vertices_.back();
}

double arc_length_position(const Polyline& line, Point p) {
  const auto v = line.vertices();
  const auto cum = line.cumulative();
  // Vertices map exactly onto their stored arc length.
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == p) return cum[k];
  }
  return closest(line, p).s;
}

double distance_to(const Polyline& line, Point p) { return std::sqrt(closest(line, p).d2); }

}  // namespace dressgrade
