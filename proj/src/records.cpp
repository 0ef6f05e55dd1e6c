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

#include "dressgrade/records.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <system_error>

#include "dressgrade/error.hpp"

namespace dressgrade {
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kUnclassifiedPrefix = "unclassified:";

ordered_json attribute_fields(std::string_view image_id, const AttributeSet& a) {
  ordered_json j;
  j["image_id"] = image_id;
  j["status"] = "ok";
  j["hem_length"] = record_value(a.hem_length);
  j["sleeve_length"] = record_value(a.sleeve_length);
  j["hem_type"] = record_value(a.hem_type);
  j["hem_ratio"] = std::isfinite(a.hem_ratio) ? ordered_json(a.hem_ratio) : ordered_json(nullptr);
  j["description"] = describe(a);
  return j;
}

std::string dump_line(const ordered_json& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

[[noreturn]] void bad_line(std::size_t line_number, const std::string& what) {
  throw Error(ErrorCode::MalformedDocument, "line " + std::to_string(line_number) + ": " + what);
}

std::optional<std::size_t> attribute_value(const ordered_json& j, const char* key, AttributeKind kind,
                                           std::size_t line_number) {
  if (!j.contains(key) || !j[key].is_string()) bad_line(line_number, std::string("missing ") + key);
  const auto text = j[key].get<std::string>();
  if (text.starts_with(kUnclassifiedPrefix)) {
    if (!parse_reason(std::string_view(text).substr(kUnclassifiedPrefix.size()))) {
      bad_line(line_number, "unknown unclassified reason '" + text + "'");
    }
    return std::nullopt;
  }
  if (auto idx = parse_index(kind, text)) return idx;
  bad_line(line_number, std::string("unknown ") + key + " '" + text + "'");
}

}  // namespace

std::string result_record(const Outcome& outcome) {
  if (outcome.attributes) return dump_line(attribute_fields(outcome.image_id, *outcome.attributes));
  ordered_json j;
  j["image_id"] = outcome.image_id;
  j["status"] = "rejected";
  j["reason"] = outcome.rejection ? canonical_name(outcome.rejection->reason) : "unreadable";
  j["detail"] = outcome.rejection ? outcome.rejection->detail : "";
  return dump_line(j);
}

std::string truth_record(std::string_view image_id, const AttributeSet& truth) {
  return dump_line(attribute_fields(image_id, truth));
}

ParsedRecord parse_record(std::string_view line, std::size_t line_number) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    bad_line(line_number, std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) bad_line(line_number, "record is not an object");
  if (!j.contains("image_id") || !j["image_id"].is_string()) bad_line(line_number, "missing image_id");
  if (!j.contains("status") || !j["status"].is_string()) bad_line(line_number, "missing status");

  ParsedRecord r;
  r.image_id = j["image_id"].get<std::string>();
  const auto status = j["status"].get<std::string>();
  if (status == "rejected") {
    const auto reason = j.contains("reason") && j["reason"].is_string() ? j["reason"].get<std::string>() : "";
    r.rejection = parse_reject_reason(reason);
    if (!r.rejection) bad_line(line_number, "unknown rejection reason '" + reason + "'");
    return r;
  }
  if (status != "ok") bad_line(line_number, "unknown status '" + status + "'");
  r.accepted = true;
  r.hem_length = attribute_value(j, "hem_length", AttributeKind::HemLength, line_number);
  r.sleeve_length = attribute_value(j, "sleeve_length", AttributeKind::SleeveLength, line_number);
  r.hem_type = attribute_value(j, "hem_type", AttributeKind::HemType, line_number);
  return r;
}

std::vector<ParsedRecord> parse_records(std::string_view text) {
  std::vector<ParsedRecord> out;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    out.push_back(parse_record(line, line_number));
  }
  return out;
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorCode::Io, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorCode::Io, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dressgrade
