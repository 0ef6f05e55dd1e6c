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

#include "dressgrade/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "dressgrade/error.hpp"

namespace dressgrade {

namespace fs = std::filesystem;

void PipelineConfig::validate() const {
  thresholds.validate();
  auto fraction = [](double v) { return v > 0.0 && v <= 1.0; };
  if (!fraction(gate.min_dress_area_fraction) || !fraction(gate.min_dominance) ||
      !fraction(gate.min_keypoint_confidence)) {
    throw Error(ErrorCode::InvalidConfig, "gate fractions must lie in (0, 1]");
  }
  if (workers < 1) throw Error(ErrorCode::InvalidConfig, "workers must be >= 1");
}

PipelineConfig pipeline_config_from_json(std::string_view json_text) {
  using nlohmann::json;
  static constexpr std::string_view kKnown[] = {
      "hem_length_edges", "sleeve_tolerance_px",    "hem_end_tolerance_px", "hem_asymmetry_gap_px",
      "aline_width_px",   "end_band_half_width_px", "arm_search_radius_px", "gate",
      "workers",
  };
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw Error(ErrorCode::InvalidConfig, "unknown config key \"" + key + "\"");
    }
  }

  PipelineConfig cfg;
  cfg.thresholds = thresholds_from_json(json_text);
  try {
    if (doc.contains("gate")) {
      const json& g = doc["gate"];
      if (!g.is_object()) throw Error(ErrorCode::InvalidConfig, "\"gate\" must be an object");
      for (const auto& [key, _] : g.items()) {
        if (key != "min_dress_area_fraction" && key != "min_dominance" && key != "min_keypoint_confidence") {
          throw Error(ErrorCode::InvalidConfig, "unknown gate key \"" + key + "\"");
        }
      }
      cfg.gate.min_dress_area_fraction = g.value("min_dress_area_fraction", cfg.gate.min_dress_area_fraction);
      cfg.gate.min_dominance = g.value("min_dominance", cfg.gate.min_dominance);
      cfg.gate.min_keypoint_confidence = g.value("min_keypoint_confidence", cfg.gate.min_keypoint_confidence);
    }
    cfg.workers = doc.value("workers", cfg.workers);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  cfg.validate();
  return cfg;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return pipeline_config_from_json(ss.str());
}

std::string_view canonical_name(RejectReason r) noexcept {
  switch (r) {
    case RejectReason::EmptyDress: return "empty_dress";
    case RejectReason::FragmentedMask: return "fragmented_mask";
    case RejectReason::MissingKeypoints: return "missing_keypoints";
    case RejectReason::LowConfidence: return "low_confidence";
    case RejectReason::Unreadable: return "unreadable";
  }
  return "";
}

std::optional<RejectReason> parse_reject_reason(std::string_view name) {
  for (auto r : {RejectReason::EmptyDress, RejectReason::FragmentedMask, RejectReason::MissingKeypoints,
                 RejectReason::LowConfidence, RejectReason::Unreadable}) {
    if (canonical_name(r) == name) return r;
  }
  return std::nullopt;
}

SceneBuild build_scene(const LabelMap& map, const KeypointSet& kp) {
  const LabelMap canonical = resize_nearest(map, kCanonicalSize, kCanonicalSize);
  const BinaryMask dress = threshold_mask(canonical, LipClass::Dress);
  const std::size_t dress_pixels = dress.on_count();
  ComponentResult largest = largest_component(dress);
  const BoundingBox box = bounding_box(largest.mask);
  const double sx = static_cast<double>(kCanonicalSize) / map.width();
  const double sy = static_cast<double>(kCanonicalSize) / map.height();
  return SceneBuild{
      SceneAnnotation{std::move(largest.mask), box, kp.scaled(sx, sy)},
      largest.component_count,
      dress_pixels,
      static_cast<std::size_t>(kCanonicalSize) * kCanonicalSize,
  };
}

namespace {

bool chains_complete(const KeypointSet& kp, double floor) {
  auto ok = [&](Joint j) { return kp[j].confidence >= floor && kp[j].confidence > 0.0; };
  const bool hips = ok(Joint::LHip) && ok(Joint::RHip);
  bool arm = false;
  bool leg = false;
  for (Side s : {Side::Left, Side::Right}) {
    const ArmJoints a = arm_joints(s);
    const LegJoints l = leg_joints(s);
    arm = arm || (ok(a.shoulder) && ok(a.elbow) && ok(a.wrist));
    leg = leg || (ok(l.hip) && ok(l.knee) && ok(l.ankle));
  }
  return hips && arm && leg;
}

}  // namespace

std::optional<Rejection> quality_gate(const SceneBuild& build, const GateConfig& gate) {
  const double area = static_cast<double>(build.dress_pixels) / static_cast<double>(build.frame_pixels);
  if (build.dress_pixels == 0 || area < gate.min_dress_area_fraction) {
    return Rejection{RejectReason::EmptyDress, "dress covers " + std::to_string(area) + " of the frame"};
  }
  const double share = static_cast<double>(build.scene.mask.on_count()) / static_cast<double>(build.dress_pixels);
  if (share < gate.min_dominance) {
    return Rejection{RejectReason::FragmentedMask, "largest of " + std::to_string(build.component_count) +
                                                       " components holds " + std::to_string(share) +
                                                       " of the dress"};
  }
  const KeypointSet& kp = build.scene.keypoints;
  if (!chains_complete(kp, gate.min_keypoint_confidence)) {
    // Would the chains be complete if weak points counted?
    if (chains_complete(kp, 0.0)) {
      return Rejection{RejectReason::LowConfidence, "required keypoints below confidence " +
                                                        std::to_string(gate.min_keypoint_confidence)};
    }
    return Rejection{RejectReason::MissingKeypoints, "need both hips, one full arm and one full leg"};
  }
  return std::nullopt;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_row(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view text, const fs::path& base_dir) {
  std::vector<ManifestEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::vector<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cols = split_row(line);
    if (!header_seen) {
      if (cols != std::vector<std::string>{"image_id", "label_map_path", "keypoints_path"}) {
        throw Error(ErrorCode::MalformedDocument,
                    "line " + std::to_string(line_no) + ": expected header image_id,label_map_path,keypoints_path");
      }
      header_seen = true;
      continue;
    }
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty() || cols[2].empty()) {
      throw Error(ErrorCode::MalformedDocument, "line " + std::to_string(line_no) + ": expected 3 non-empty columns");
    }
    ManifestEntry e{cols[0], cols[1], cols[2]};
    if (e.label_map.is_relative()) e.label_map = base_dir / e.label_map;
    if (e.keypoints.is_relative()) e.keypoints = base_dir / e.keypoints;
    entries.push_back(std::move(e));
  }
  if (!header_seen) throw Error(ErrorCode::MalformedDocument, "manifest is empty");
  std::vector<std::string> ids;
  ids.reserve(entries.size());
  for (const auto& e : entries) ids.push_back(e.image_id);
  std::sort(ids.begin(), ids.end());
  if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end()) {
    throw Error(ErrorCode::MalformedDocument, "duplicate image_id \"" + *dup + "\"");
  }
  return entries;
}

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read manifest " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), path.parent_path());
}

Outcome process_scene(std::string image_id, const LabelMap& map, const KeypointSet& kp, const PipelineConfig& cfg) {
  Outcome out{std::move(image_id), std::nullopt, std::nullopt};
  std::optional<SceneBuild> build;
  try {
    build.emplace(build_scene(map, kp));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyMask) throw;
    out.rejection = Rejection{RejectReason::EmptyDress, "no dress pixels"};
    return out;
  }
  if (auto rejected = quality_gate(*build, cfg.gate)) {
    out.rejection = std::move(rejected);
    return out;
  }
  build->scene.keypoints = build->scene.keypoints.with_confidence_floor(cfg.gate.min_keypoint_confidence);
  out.attributes = classify_all(build->scene, cfg.thresholds);
  return out;
}

Outcome process_image(const ManifestEntry& entry, const PipelineConfig& cfg) {
  try {
    const LabelMap map = decode_label_map(read_rgb(entry.label_map));
    std::ifstream in(entry.keypoints);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + entry.keypoints.string());
    std::stringstream ss;
    ss << in.rdbuf();
    const KeypointSet kp = parse_keypoints(ss.str());
    return process_scene(entry.image_id, map, kp, cfg);
  } catch (const std::exception& e) {
    return Outcome{entry.image_id, std::nullopt, Rejection{RejectReason::Unreadable, e.what()}};
  }
}

std::size_t BatchResult::accepted() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.attributes.has_value(); }));
}

std::size_t BatchResult::rejected() const noexcept { return outcomes.size() - accepted(); }

BatchResult run_batch(const std::vector<ManifestEntry>& manifest, const PipelineConfig& cfg) {
  BatchResult result;
  result.outcomes.resize(manifest.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < manifest.size(); i = next++) {
      result.outcomes[i] = process_image(manifest[i], cfg);
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::max(1, cfg.workers));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  return result;
}

}  // namespace dressgrade
