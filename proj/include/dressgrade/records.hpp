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

// Line-delimited result and truth records, and atomic file output.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dressgrade/attributes.hpp"
#include "dressgrade/pipeline.hpp"

namespace dressgrade {

// One JSON object, no trailing newline. Accepted outcomes carry image_id,
// status "ok", the three attribute values, hem_ratio (null when unknown) and
// the description; rejected ones carry status "rejected", reason and detail.
std::string result_record(const Outcome& outcome);
std::string truth_record(std::string_view image_id, const AttributeSet& truth);

struct ParsedRecord {
  std::string image_id;
  bool accepted = false;
  std::optional<RejectReason> rejection;
  // Value index per attribute class; nullopt is Unclassified.
  std::optional<std::size_t> hem_length;
  std::optional<std::size_t> sleeve_length;
  std::optional<std::size_t> hem_type;
};

// Throws Error(MalformedDocument) naming the 1-based line and the problem.
ParsedRecord parse_record(std::string_view line, std::size_t line_number);
std::vector<ParsedRecord> parse_records(std::string_view text);

// Writes to a sibling temporary file, then renames over `path`.
// Throws Error(Io).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Throws Error(Io).
std::string read_text_file(const std::filesystem::path& path);

}  // namespace dressgrade
