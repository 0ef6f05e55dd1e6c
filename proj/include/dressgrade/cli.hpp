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

// Subcommand bodies behind the dressgrade executable. Each returns a process
// exit code and writes diagnostics to `err`.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "dressgrade/synth.hpp"

namespace dressgrade {

// Fixed exit-code taxonomy. Per-image problems never change the exit code.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,           // bad flag values, infeasible targets
  kExitMalformedInput = 2,  // manifest, prediction or truth file
  kExitBadConfig = 3,       // config missing, unreadable or invalid
  kExitUnwritable = 4,      // output file or directory
  kExitEmptyJoin = 5,       // predictions and truth share no image_id
};

inline constexpr const char* kConfigEnvVar = "DRESSGRADE_CONFIG";

struct ClassifyOptions {
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> config;  // falls back to DRESSGRADE_CONFIG
  std::filesystem::path out;
  std::optional<int> workers;  // overrides the config value
};

struct SynthOptions {
  std::size_t n = 10;
  std::uint64_t seed = 0;
  std::optional<std::string> targets;  // "aline,knee,long", any order
  std::filesystem::path out;
  double margin = 0.5;
  std::optional<double> occlusion_split;
};

struct EvaluateOptions {
  std::filesystem::path pred;
  std::filesystem::path truth;
  std::filesystem::path report;  // ".csv" selects CSV, anything else the table
};

int cmd_classify(const ClassifyOptions& opts, std::ostream& err);
int cmd_synth(const SynthOptions& opts, std::ostream& err);
int cmd_evaluate(const EvaluateOptions& opts, std::ostream& err);

// One canonical name per attribute class, comma separated, in any order.
// Throws Error(MalformedDocument).
FigureTargets parse_targets(std::string_view text);

// Names of the files cmd_synth writes for figure `index`.
std::string synth_image_id(std::size_t index);

}  // namespace dressgrade
