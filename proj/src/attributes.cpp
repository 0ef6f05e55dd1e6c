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

#include "dressgrade/attributes.hpp"

#include "dressgrade/error.hpp"

namespace dressgrade {

namespace {

struct Entry {
  std::string_view name;
  std::string_view label;
  std::string_view phrase;
};

constexpr std::array<Entry, 10> kHemLength{{
    {"floor_length", "Floor Length", "floor length"},
    {"evening", "Evening", "evening"},
    {"lower_calf", "Lower Calf", "lower calf"},
    {"below_midcalf", "Below Midcalf", "below-midcalf"},
    {"midcalf", "Midcalf", "midcalf"},
    {"below_knee", "Below Knee", "below-knee"},
    {"knee", "Knee", "knee"},
    {"above_knee", "Above Knee", "above-knee"},
    {"mini", "Mini", "mini"},
    {"micro", "Micro", "micro"},
}};

constexpr std::array<Entry, 5> kSleeve{{
    {"long", "Long", "long"},
    {"bracelet", "Bracelet", "bracelet"},
    {"elbow", "Elbow", "elbow"},
    {"short", "Short", "short"},
    {"cap", "Cap", "cap"},
}};

constexpr std::array<Entry, 4> kHemType{{
    {"aline", "Aline", "A-line"},
    {"straight", "Straight", "straight"},
    {"high_low", "High-low", "high-low"},
    {"asymmetrical", "Asymmetrical", "asymmetrical"},
}};

constexpr std::array<std::string_view, 6> kReasons{
    "no_band_matched", "non_finite_ratio", "missing_keypoint",
    "degenerate_legs", "degenerate_limb", "hem_end_not_found",
};

const Entry* table(AttributeKind kind, std::size_t& n) noexcept {
  switch (kind) {
    case AttributeKind::HemLength: n = kHemLength.size(); return kHemLength.data();
    case AttributeKind::SleeveLength: n = kSleeve.size(); return kSleeve.data();
    case AttributeKind::HemType: n = kHemType.size(); return kHemType.data();
  }
  n = 0;
  return nullptr;
}

const Entry& entry(AttributeKind kind, std::size_t index) noexcept {
  std::size_t n = 0;
  const Entry* t = table(kind, n);
  return t[index < n ? index : 0];
}

template <typename A>
std::string_view phrase(const Classified<A>& c) {
  if (!c) return "unclassified";
  return entry(AttributeTraits<A>::kind, static_cast<std::size_t>(*c)).phrase;
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyMask: return "EmptyMask";
    case ErrorCode::NoPixelInBand: return "NoPixelInBand";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::MissingKeypoint: return "MissingKeypoint";
    case ErrorCode::DegenerateLegs: return "DegenerateLegs";
    case ErrorCode::DegenerateLimb: return "DegenerateLimb";
    case ErrorCode::HemEndNotFound: return "HemEndNotFound";
    case ErrorCode::MixedAttributeLabels: return "MixedAttributeLabels";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::size_t value_count(AttributeKind kind) noexcept {
  std::size_t n = 0;
  table(kind, n);
  return n;
}

std::string_view canonical_name(HemLength v) noexcept {
  return entry(AttributeKind::HemLength, static_cast<std::size_t>(v)).name;
}
std::string_view canonical_name(SleeveLength v) noexcept {
  return entry(AttributeKind::SleeveLength, static_cast<std::size_t>(v)).name;
}
std::string_view canonical_name(HemType v) noexcept {
  return entry(AttributeKind::HemType, static_cast<std::size_t>(v)).name;
}

std::string_view canonical_name(AttributeKind kind) noexcept {
  switch (kind) {
    case AttributeKind::HemLength: return "hem_length";
    case AttributeKind::SleeveLength: return "sleeve_length";
    case AttributeKind::HemType: return "hem_type";
  }
  return "";
}

std::string_view canonical_name(AttributeKind kind, std::size_t index) noexcept {
  return entry(kind, index).name;
}

std::string_view display_label(AttributeKind kind, std::size_t index) noexcept {
  return entry(kind, index).label;
}

std::string_view display_label(AttributeKind kind) noexcept {
  switch (kind) {
    case AttributeKind::HemLength: return "Hem Length";
    case AttributeKind::SleeveLength: return "Sleeve Length";
    case AttributeKind::HemType: return "Hem Type";
  }
  return "";
}

std::optional<std::size_t> parse_index(AttributeKind kind, std::string_view name) {
  std::size_t n = 0;
  const Entry* t = table(kind, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].name == name) return i;
  }
  return std::nullopt;
}

template <typename A>
std::optional<A> parse_name(std::string_view name) {
  auto idx = parse_index(AttributeTraits<A>::kind, name);
  if (!idx) return std::nullopt;
  return static_cast<A>(*idx);
}

template std::optional<HemLength> parse_name<HemLength>(std::string_view);
template std::optional<SleeveLength> parse_name<SleeveLength>(std::string_view);
template std::optional<HemType> parse_name<HemType>(std::string_view);

std::string_view canonical_name(Reason r) noexcept {
  return kReasons[static_cast<std::size_t>(r)];
}

std::optional<Reason> parse_reason(std::string_view name) {
  for (std::size_t i = 0; i < kReasons.size(); ++i) {
    if (kReasons[i] == name) return static_cast<Reason>(i);
  }
  return std::nullopt;
}

std::string describe(const AttributeSet& attrs) {
  std::string out;
  out += phrase(attrs.hem_type);
  out += ' ';
  out += phrase(attrs.hem_length);
  out += " dress with ";
  out += phrase(attrs.sleeve_length);
  out += " sleeves";
  return out;
}

}  // namespace dressgrade
