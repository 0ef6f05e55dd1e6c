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

// Per-class precision / recall / F1, macro averages and tabular reports.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dressgrade/attributes.hpp"

namespace dressgrade {

// A value of one attribute class; a missing index is Unclassified.
struct AnyLabel {
  AttributeKind kind;
  std::optional<std::size_t> index;

  template <typename A>
  static AnyLabel of(A v) {
    return {AttributeTraits<A>::kind, static_cast<std::size_t>(v)};
  }
  template <typename A>
  static AnyLabel of(const Classified<A>& c) {
    return {AttributeTraits<A>::kind, c ? std::optional<std::size_t>(static_cast<std::size_t>(*c)) : std::nullopt};
  }

  friend bool operator==(const AnyLabel&, const AnyLabel&) = default;
};

struct LabelPair {
  AnyLabel predicted;
  AnyLabel actual;
};

// counts[predicted][actual]; predicted row `size()` is Unclassified.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(AttributeKind kind);

  AttributeKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return n_; }

  std::uint64_t count(std::size_t predicted, std::size_t actual) const noexcept {
    return counts_[predicted * n_ + actual];
  }
  std::uint64_t unclassified(std::size_t actual) const noexcept { return counts_[n_ * n_ + actual]; }
  void add(std::optional<std::size_t> predicted, std::size_t actual, std::uint64_t times = 1);

  std::uint64_t tp(std::size_t c) const noexcept;
  std::uint64_t fp(std::size_t c) const noexcept;
  std::uint64_t fn(std::size_t c) const noexcept;  // includes Unclassified predictions
  std::uint64_t total() const noexcept;

  ConfusionMatrix& operator+=(const ConfusionMatrix& other);

 private:
  AttributeKind kind_;
  std::size_t n_;
  std::vector<std::uint64_t> counts_;  // (n_ + 1) x n_
};

// Throws Error(MixedAttributeLabels) when the pairs span several attribute
// classes, or an actual label is Unclassified.
ConfusionMatrix confusion(AttributeKind kind, std::span<const LabelPair> pairs);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t support = 0;
  bool precision_undefined = false;  // TP + FP == 0, reported as 0
  bool recall_undefined = false;     // TP + FN == 0, reported as 0
};

double f1_score(double precision, double recall) noexcept;

struct ClassReport {
  AttributeKind kind;
  std::vector<ClassMetrics> per_value;  // taxonomy order
  // Unweighted means over the values with at least one prediction or truth.
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;

  // Builds a report from known (precision, recall, f1) rows.
  static ClassReport from_rows(AttributeKind kind, std::span<const ClassMetrics> rows);
};

ClassReport metrics(const ConfusionMatrix& m);

struct Report {
  std::vector<ClassReport> classes;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
};

// Fixed-width table, 3 decimals, one macro row per class.
std::string report_table(const Report& report);
// class,attribute,precision,recall,f1,support
std::string report_csv(const Report& report);

// Reference per-class scores of the rule-based classifier, used to check the
// metric arithmetic. F1 values are taken as printed.
Report reference_report();

}  // namespace dressgrade
