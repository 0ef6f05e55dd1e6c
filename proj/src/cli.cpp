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

#include "dressgrade/cli.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <set>
#include <system_error>
#include <unordered_map>
#include <vector>

#include "dressgrade/error.hpp"
#include "dressgrade/eval.hpp"
#include "dressgrade/pipeline.hpp"
#include "dressgrade/raster.hpp"
#include "dressgrade/records.hpp"

namespace dressgrade {
namespace fs = std::filesystem;

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string list_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::string synth_image_id(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fig_%05zu", index);
  return buf;
}

FigureTargets parse_targets(std::string_view text) {
  std::optional<HemLength> length;
  std::optional<SleeveLength> sleeve;
  std::optional<HemType> type;
  std::size_t tokens = 0;
  while (true) {
    const auto comma = text.find(',');
    std::string token(text.substr(0, comma));
    std::erase_if(token, [](unsigned char ch) { return std::isspace(ch) != 0; });
    for (char& ch : token) ch = ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    ++tokens;
    bool matched = false;
    if (auto v = parse_name<HemLength>(token); v && !length) length = v, matched = true;
    else if (auto s = parse_name<SleeveLength>(token); s && !sleeve) sleeve = s, matched = true;
    else if (auto t = parse_name<HemType>(token); t && !type) type = t, matched = true;
    if (!matched) throw Error(ErrorCode::MalformedDocument, "bad or repeated target '" + token + "'");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (tokens != 3 || !length || !sleeve || !type) {
    throw Error(ErrorCode::MalformedDocument, "targets need one hem type, one hem length and one sleeve length");
  }
  return {*length, *sleeve, *type};
}

int cmd_classify(const ClassifyOptions& opts, std::ostream& err) {
  PipelineConfig cfg;
  std::optional<fs::path> config_path = opts.config;
  if (!config_path) {
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') config_path = fs::path(env);
  }
  if (config_path) {
    try {
      cfg = load_pipeline_config(*config_path);
    } catch (const std::exception& e) {
      err << "config: " << e.what() << '\n';
      return kExitBadConfig;
    }
  }
  if (opts.workers) {
    cfg.workers = *opts.workers;
    try {
      cfg.validate();
    } catch (const Error& e) {
      err << "workers: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  std::vector<ManifestEntry> manifest;
  try {
    manifest = read_manifest(opts.manifest);
  } catch (const std::exception& e) {
    err << "manifest: " << e.what() << '\n';
    return kExitMalformedInput;
  }

  const BatchResult batch = run_batch(manifest, cfg);
  std::vector<std::string> lines;
  lines.reserve(batch.outcomes.size());
  for (const auto& o : batch.outcomes) lines.push_back(result_record(o));
  try {
    write_file_atomic(opts.out, join_lines(lines));
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUnwritable;
  }
  err << batch.outcomes.size() << " images: " << batch.accepted() << " classified, " << batch.rejected()
      << " rejected\n";
  return kExitOk;
}

int cmd_synth(const SynthOptions& opts, std::ostream& err) {
  std::optional<FigureTargets> fixed;
  if (opts.targets) {
    try {
      fixed = parse_targets(*opts.targets);
    } catch (const Error& e) {
      err << "targets: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  if (!(opts.margin >= 0.0 && opts.margin < 1.0)) {
    err << "margin must lie in [0, 1)\n";
    return kExitUsage;
  }
  if (opts.occlusion_split && !(*opts.occlusion_split > 0.0 && *opts.occlusion_split < 1.0)) {
    err << "occlusion split must lie in (0, 1)\n";
    return kExitUsage;
  }

  std::error_code ec;
  fs::create_directories(opts.out, ec);
  if (ec || !fs::is_directory(opts.out)) {
    err << "cannot create " << opts.out.string() << '\n';
    return kExitUnwritable;
  }

  std::vector<std::string> manifest{"image_id,label_map_path,keypoints_path"};
  std::vector<std::string> truth;
  try {
    for (std::size_t i = 0; i < opts.n; ++i) {
      const std::uint64_t s = figure_seed(opts.seed, i);
      const FigureTargets targets = fixed ? *fixed : sample_targets(s);
      FigureSpec spec;
      try {
        spec = sample_spec(targets, figure_seed(s, 1), opts.margin);
      } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitUsage;
      }
      spec.occlusion_split = opts.occlusion_split;
      const Figure fig = generate_figure(spec, figure_seed(s, 2));

      const std::string id = synth_image_id(i);
      write_rgb(opts.out / (id + ".png"), encode_label_map(fig.labels));
      write_file_atomic(opts.out / (id + ".json"), serialize_keypoints(fig.keypoints) + "\n");
      manifest.push_back(id + "," + id + ".png," + id + ".json");
      truth.push_back(truth_record(id, fig.truth));
    }
    write_file_atomic(opts.out / "manifest.csv", join_lines(manifest));
    write_file_atomic(opts.out / "truth.jsonl", join_lines(truth));
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::Io ? kExitUnwritable : kExitUsage;
  }
  return kExitOk;
}

int cmd_evaluate(const EvaluateOptions& opts, std::ostream& err) {
  std::vector<ParsedRecord> pred;
  std::vector<ParsedRecord> truth;
  const auto load = [&](const fs::path& path, std::vector<ParsedRecord>& into) {
    try {
      into = parse_records(read_text_file(path));
    } catch (const Error& e) {
      err << path.string() << ": " << e.what() << '\n';
      return false;
    }
    std::set<std::string> seen;
    for (const auto& r : into) {
      if (!seen.insert(r.image_id).second) {
        err << path.string() << ": duplicate image_id '" << r.image_id << "'\n";
        return false;
      }
    }
    return true;
  };
  if (!load(opts.pred, pred) || !load(opts.truth, truth)) return kExitMalformedInput;
  for (const auto& t : truth) {
    if (!t.accepted || !t.hem_length || !t.sleeve_length || !t.hem_type) {
      err << opts.truth.string() << ": truth for '" << t.image_id << "' is not fully classified\n";
      return kExitMalformedInput;
    }
  }

  std::unordered_map<std::string, const ParsedRecord*> by_id;
  for (const auto& p : pred) by_id.emplace(p.image_id, &p);

  ConfusionMatrix hem_length(AttributeKind::HemLength);
  ConfusionMatrix sleeve(AttributeKind::SleeveLength);
  ConfusionMatrix hem_type(AttributeKind::HemType);
  std::vector<std::string> truth_only;
  std::set<std::string> joined;
  for (const auto& t : truth) {
    const auto it = by_id.find(t.image_id);
    if (it == by_id.end()) {
      truth_only.push_back(t.image_id);
      continue;
    }
    joined.insert(t.image_id);
    // A rejected prediction counts as Unclassified for every attribute class.
    const ParsedRecord& p = *it->second;
    hem_length.add(p.hem_length, *t.hem_length);
    sleeve.add(p.sleeve_length, *t.sleeve_length);
    hem_type.add(p.hem_type, *t.hem_type);
  }
  std::vector<std::string> pred_only;
  for (const auto& p : pred) {
    if (!joined.contains(p.image_id)) pred_only.push_back(p.image_id);
  }
  if (joined.empty()) {
    err << "no image_id appears in both files\n";
    return kExitEmptyJoin;
  }

  Report report;
  report.classes = {metrics(hem_length), metrics(sleeve), metrics(hem_type)};
  if (!pred_only.empty()) {
    report.warnings.push_back(std::to_string(pred_only.size()) + " ids only in predictions: " + list_ids(pred_only));
  }
  if (!truth_only.empty()) {
    report.warnings.push_back(std::to_string(truth_only.size()) + " ids only in truth: " + list_ids(truth_only));
  }
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  const bool csv = opts.report.extension() == ".csv";
  try {
    write_file_atomic(opts.report, csv ? report_csv(report) : report_table(report));
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUnwritable;
  }
  return kExitOk;
}

}  // namespace dressgrade
