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

// Scene fusion, the quality gate and ordered parallel batch classification.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dressgrade/attributes.hpp"
#include "dressgrade/classify.hpp"
#include "dressgrade/keypoints.hpp"
#include "dressgrade/mask.hpp"

namespace dressgrade {

struct GateConfig {
  double min_dress_area_fraction = 0.02;
  double min_dominance = 0.9;  // largest component share of all dress pixels
  double min_keypoint_confidence = 0.3;
};

struct PipelineConfig {
  Thresholds thresholds;
  GateConfig gate;
  int workers = 1;

  void validate() const;
};

// Keys: the Thresholds field names, "gate" {min_dress_area_fraction,
// min_dominance, min_keypoint_confidence} and "workers". Absent keys keep
// their defaults. Throws Error(InvalidConfig).
PipelineConfig pipeline_config_from_json(std::string_view json_text);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

enum class RejectReason {
  EmptyDress,
  FragmentedMask,
  MissingKeypoints,
  LowConfidence,
  Unreadable,  // input file missing, undecodable or malformed
};

std::string_view canonical_name(RejectReason r) noexcept;
std::optional<RejectReason> parse_reject_reason(std::string_view name);

struct Rejection {
  RejectReason reason;
  std::string detail;
};

struct SceneBuild {
  SceneAnnotation scene;
  int component_count = 0;
  std::size_t dress_pixels = 0;  // before component filtering
  std::size_t frame_pixels = 0;
};

// Rescales to the canonical frame, keeps the dress class, reduces it to its
// largest component and boxes it. Throws Error(EmptyMask) for a dress-free map.
SceneBuild build_scene(const LabelMap& map, const KeypointSet& kp);

// nullopt means accepted.
std::optional<Rejection> quality_gate(const SceneBuild& build, const GateConfig& gate);

struct ManifestEntry {
  std::string image_id;
  std::filesystem::path label_map;
  std::filesystem::path keypoints;
};

// Header "image_id,label_map_path,keypoints_path" then one row per image.
// Relative paths resolve against `base_dir`. Throws Error(MalformedDocument)
// naming the offending line.
std::vector<ManifestEntry> parse_manifest(std::string_view text, const std::filesystem::path& base_dir = {});
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

struct Outcome {
  std::string image_id;
  std::optional<AttributeSet> attributes;  // set iff accepted
  std::optional<Rejection> rejection;      // set iff rejected
};

// One image end to end; never throws for per-image problems.
Outcome process_image(const ManifestEntry& entry, const PipelineConfig& cfg);
Outcome process_scene(std::string image_id, const LabelMap& map, const KeypointSet& kp, const PipelineConfig& cfg);

struct BatchResult {
  std::vector<Outcome> outcomes;  // manifest order

  std::size_t accepted() const noexcept;
  std::size_t rejected() const noexcept;
};

BatchResult run_batch(const std::vector<ManifestEntry>& manifest, const PipelineConfig& cfg);

}  // namespace dressgrade
