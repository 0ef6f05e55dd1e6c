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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "dressgrade/cli.hpp"
#include "dressgrade/error.hpp"
#include "dressgrade/records.hpp"
#include "test_support.hpp"

using namespace dressgrade;
using dressgrade::testing::TempDir;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string err;
};

// Runs the dressgrade executable with `args`; stderr is captured.
Run cli(const TempDir& dir, const std::string& args, const std::string& env = "") {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = env + " '" + std::string(DRESSGRADE_CLI_PATH) + "' " + args + " 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_text_file(err)};
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) out[e.path().filename().string()] = read_text_file(e.path());
  return out;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("parse_targets accepts one name per class in any order") {
  const FigureTargets t = parse_targets("aline,knee,long");
  CHECK(t.hem_type == HemType::Aline);
  CHECK(t.hem_length == HemLength::Knee);
  CHECK(t.sleeve_length == SleeveLength::Long);
  CHECK(parse_targets(" Long , high-low ,below_knee") ==
        FigureTargets{HemLength::BelowKnee, SleeveLength::Long, HemType::HighLow});
  CHECK_THROWS_AS(parse_targets("aline,knee"), Error);
  CHECK_THROWS_AS(parse_targets("aline,knee,mini"), Error);
  CHECK_THROWS_AS(parse_targets("aline,knee,long,cap"), Error);
  CHECK_THROWS_AS(parse_targets("aline,knee,sleeveless"), Error);
}

TEST_CASE("records round trip") {
  AttributeSet a;
  a.hem_length = HemLength::Knee;
  a.sleeve_length = Classified<SleeveLength>::unclassified(Reason::NoBandMatched);
  a.hem_type = HemType::Straight;
  a.hem_ratio = 0.5;
  const std::string line = result_record(Outcome{"k1", a, std::nullopt});
  CHECK(line ==
        R"({"image_id":"k1","status":"ok","hem_length":"knee","sleeve_length":"unclassified:no_band_matched",)"
        R"("hem_type":"straight","hem_ratio":0.5,"description":"straight knee dress with unclassified sleeves"})");
  const ParsedRecord r = parse_record(line, 1);
  CHECK(r.accepted);
  CHECK(r.hem_length == static_cast<std::size_t>(HemLength::Knee));
  CHECK_FALSE(r.sleeve_length);
  CHECK(r.hem_type == static_cast<std::size_t>(HemType::Straight));

  const std::string rej = result_record(Outcome{"k2", std::nullopt, Rejection{RejectReason::FragmentedMask, "x"}});
  CHECK(rej == R"({"image_id":"k2","status":"rejected","reason":"fragmented_mask","detail":"x"})");
  CHECK(parse_record(rej, 1).rejection == RejectReason::FragmentedMask);

  AttributeSet nan_ratio = a;
  nan_ratio.hem_ratio = std::numeric_limits<double>::quiet_NaN();
  CHECK(truth_record("k3", nan_ratio).find(R"("hem_ratio":null)") != std::string::npos);

  try {
    parse_records(line + "\n\n" + R"({"image_id":"z","status":"ok","hem_length":"kneeish"})" + "\n");
    FAIL("expected MalformedDocument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedDocument);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("atomic writes replace the target and leave no temporary file") {
  TempDir dir("atomic");
  write_file_atomic(dir / "out.txt", "one");
  write_file_atomic(dir / "out.txt", "two");
  CHECK(read_text_file(dir / "out.txt") == "two");
  CHECK(snapshot(dir.path()).size() == 1);
  CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "out.txt", "x"), Error);
}

TEST_CASE("synth writes figures, manifest and truth deterministically") {
  TempDir dir("synth");
  REQUIRE(cli(dir, "synth --n 10 --seed 7 --out " + q(dir / "a")).code == 0);
  REQUIRE(cli(dir, "synth --n 10 --seed 7 --out " + q(dir / "b")).code == 0);
  const auto a = snapshot(dir / "a");
  CHECK(a.size() == 22);
  CHECK(a.count("manifest.csv") == 1);
  CHECK(lines(a.at("manifest.csv")) == 11);
  CHECK(lines(a.at("truth.jsonl")) == 10);
  CHECK(a.count("fig_00009.png") == 1);
  CHECK(a == snapshot(dir / "b"));

  REQUIRE(cli(dir, "synth --n 10 --seed 8 --out " + q(dir / "c")).code == 0);
  CHECK(snapshot(dir / "c").at("truth.jsonl") != a.at("truth.jsonl"));
}

TEST_CASE("synth with fixed targets") {
  TempDir dir("targets");
  REQUIRE(cli(dir, "synth --n 10 --seed 3 --targets aline,knee,long --out " + q(dir / "t")).code == 0);
  for (const auto& r : parse_records(read_text_file(dir / "t" / "truth.jsonl"))) {
    CHECK(r.hem_type == static_cast<std::size_t>(HemType::Aline));
    CHECK(r.hem_length == static_cast<std::size_t>(HemLength::Knee));
    CHECK(r.sleeve_length == static_cast<std::size_t>(SleeveLength::Long));
  }
  CHECK(cli(dir, "synth --n 1 --seed 3 --targets aline,knee --out " + q(dir / "u")).code == kExitUsage);
}

TEST_CASE("synth into an unwritable location") {
  TempDir dir("unwritable");
  write_text(dir / "file", "x");
  CHECK(cli(dir, "synth --n 1 --seed 1 --out " + q(dir / "file" / "sub")).code == kExitUnwritable);
}

TEST_CASE("classify: records per manifest line, isolation, determinism") {
  TempDir dir("classify");
  REQUIRE(cli(dir, "synth --n 30 --seed 11 --out " + q(dir / "c")).code == 0);
  const Run r1 = cli(dir, "classify --manifest " + q(dir / "c" / "manifest.csv") + " --out " + q(dir / "p1.jsonl") +
                              " --workers 1");
  REQUIRE(r1.code == 0);
  REQUIRE(cli(dir, "classify --manifest " + q(dir / "c" / "manifest.csv") + " --out " + q(dir / "p8.jsonl") +
                       " --workers 8")
              .code == 0);
  const std::string p1 = read_text_file(dir / "p1.jsonl");
  CHECK(lines(p1) == 30);
  CHECK(p1 == read_text_file(dir / "p8.jsonl"));

  // Predictions equal truth on clean synthetic figures.
  REQUIRE(cli(dir, "evaluate --pred " + q(dir / "p1.jsonl") + " --truth " + q(dir / "c" / "truth.jsonl") +
                       " --report " + q(dir / "report.csv"))
              .code == 0);
  const std::string csv = read_text_file(dir / "report.csv");
  CHECK(csv.find("hem_length,macro_avg,") != std::string::npos);

  std::string manifest = read_text_file(dir / "c" / "manifest.csv");
  const std::string three = manifest.substr(0, manifest.find("fig_00003"));
  write_text(dir / "c" / "three.csv", three);
  CHECK(cli(dir, "classify --manifest " + q(dir / "c" / "three.csv") + " --out " + q(dir / "three.jsonl")).code == 0);
  CHECK(lines(read_text_file(dir / "three.jsonl")) == 3);

  std::string broken = three;
  broken.replace(broken.find("fig_00001.png"), 13, "nowhere.png");
  write_text(dir / "c" / "broken.csv", broken);
  CHECK(cli(dir, "classify --manifest " + q(dir / "c" / "broken.csv") + " --out " + q(dir / "broken.jsonl")).code ==
        0);
  const auto recs = parse_records(read_text_file(dir / "broken.jsonl"));
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].accepted);
  CHECK(recs[1].rejection == RejectReason::Unreadable);
  CHECK(recs[2].accepted);
}

TEST_CASE("classify exit codes") {
  TempDir dir("codes");
  REQUIRE(cli(dir, "synth --n 2 --seed 1 --out " + q(dir / "c")).code == 0);
  const std::string manifest = q(dir / "c" / "manifest.csv");
  write_text(dir / "bad.csv", "id,path\n");
  CHECK(cli(dir, "classify --manifest " + q(dir / "bad.csv") + " --out " + q(dir / "o.jsonl")).code ==
        kExitMalformedInput);
  CHECK(cli(dir, "classify --manifest " + q(dir / "none.csv") + " --out " + q(dir / "o.jsonl")).code ==
        kExitMalformedInput);
  CHECK(cli(dir, "classify --manifest " + manifest + " --config " + q(dir / "none.json") + " --out " +
                     q(dir / "o.jsonl"))
            .code == kExitBadConfig);
  write_text(dir / "bad.json", R"({"workers": "many"})");
  write_text(dir / "good.json", R"({"workers": 2})");
  CHECK(cli(dir, "classify --manifest " + manifest + " --out " + q(dir / "o.jsonl"),
            "DRESSGRADE_CONFIG=" + q(dir / "bad.json"))
            .code == kExitBadConfig);
  CHECK(cli(dir, "classify --manifest " + manifest + " --config " + q(dir / "good.json") + " --out " +
                     q(dir / "o.jsonl"),
            "DRESSGRADE_CONFIG=" + q(dir / "bad.json"))
            .code == 0);
  CHECK(cli(dir, "classify --manifest " + manifest + " --out " + q(dir / "no" / "o.jsonl")).code == kExitUnwritable);
  CHECK(cli(dir, "classify --manifest " + manifest + " --out " + q(dir / "o.jsonl") + " --workers 0").code ==
        kExitUsage);
  CHECK(cli(dir, "classify --out x").code == kExitUsage);
}

TEST_CASE("evaluate") {
  TempDir dir("evaluate");
  REQUIRE(cli(dir, "synth --n 12 --seed 5 --out " + q(dir / "c")).code == 0);
  const fs::path truth = dir / "c" / "truth.jsonl";

  REQUIRE(cli(dir, "evaluate --pred " + q(truth) + " --truth " + q(truth) + " --report " + q(dir / "r.txt")).code ==
          0);
  const std::string table = read_text_file(dir / "r.txt");
  for (const char* cls : {"Hem Length     macro avg      1.000      1.000    1.000",
                          "Sleeve Length  macro avg      1.000      1.000    1.000",
                          "Hem Type       macro avg      1.000      1.000    1.000"}) {
    CHECK(table.find(cls) != std::string::npos);
  }

  std::string text = read_text_file(truth);
  std::string bad = text;
  const auto second = bad.find('\n') + 1;
  const auto at = bad.find("\"hem_length\":\"", second) + 14;
  bad.insert(at, "x");
  write_text(dir / "bad.jsonl", bad);
  const Run r = cli(dir, "evaluate --pred " + q(truth) + " --truth " + q(dir / "bad.jsonl") + " --report " +
                             q(dir / "r2.txt"));
  CHECK(r.code == kExitMalformedInput);
  CHECK(r.err.find("line 2") != std::string::npos);

  write_text(dir / "other.jsonl",
             R"({"image_id":"zzz","status":"ok","hem_length":"knee","sleeve_length":"cap","hem_type":"aline"})"
             "\n");
  CHECK(cli(dir, "evaluate --pred " + q(dir / "other.jsonl") + " --truth " + q(truth) + " --report " +
                     q(dir / "r3.txt"))
            .code == kExitEmptyJoin);

  // Partial overlap: unmatched ids are listed as warnings.
  const std::string first_two = text.substr(0, text.find('\n', text.find('\n') + 1) + 1);
  write_text(dir / "partial.jsonl", first_two + read_text_file(dir / "other.jsonl"));
  REQUIRE(cli(dir, "evaluate --pred " + q(dir / "partial.jsonl") + " --truth " + q(truth) + " --report " +
                       q(dir / "r4.txt"))
              .code == 0);
  const std::string partial = read_text_file(dir / "r4.txt");
  CHECK(partial.find("warnings:") != std::string::npos);
  CHECK(partial.find("1 ids only in predictions: zzz") != std::string::npos);
  CHECK(partial.find("10 ids only in truth") != std::string::npos);

  // Rejected predictions count as unclassified.
  write_text(dir / "rejected.jsonl", R"({"image_id":"fig_00000","status":"rejected","reason":"fragmented_mask","detail":""})"
                                     "\n");
  REQUIRE(cli(dir, "evaluate --pred " + q(dir / "rejected.jsonl") + " --truth " + q(truth) + " --report " +
                       q(dir / "r5.csv"))
              .code == 0);
  CHECK(read_text_file(dir / "r5.csv").find(",0.000,0.000,0.000,1\n") != std::string::npos);
}
