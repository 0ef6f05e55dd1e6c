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

// Dress attribute taxonomy: hem length, sleeve length and hem type, plus the
// combined classification result and its one-line description.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace dressgrade {

// Ordered longest to shortest.
enum class HemLength {
  FloorLength,
  Evening,
  LowerCalf,
  BelowMidcalf,
  Midcalf,
  BelowKnee,
  Knee,
  AboveKnee,
  Mini,
  Micro,
};

// Ordered longest to shortest.
enum class SleeveLength { Long, Bracelet, Elbow, Short, Cap };

enum class HemType { Aline, Straight, HighLow, Asymmetrical };

enum class AttributeKind { HemLength, SleeveLength, HemType };

template <typename A>
struct AttributeTraits;

template <>
struct AttributeTraits<HemLength> {
  static constexpr AttributeKind kind = AttributeKind::HemLength;
  static constexpr std::size_t count = 10;
};
template <>
struct AttributeTraits<SleeveLength> {
  static constexpr AttributeKind kind = AttributeKind::SleeveLength;
  static constexpr std::size_t count = 5;
};
template <>
struct AttributeTraits<HemType> {
  static constexpr AttributeKind kind = AttributeKind::HemType;
  static constexpr std::size_t count = 4;
};

template <typename A>
constexpr std::array<A, AttributeTraits<A>::count> all_values() {
  std::array<A, AttributeTraits<A>::count> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<A>(i);
  return out;
}

std::size_t value_count(AttributeKind kind) noexcept;

// Canonical machine names (snake_case), e.g. "below_midcalf", "high_low".
std::string_view canonical_name(HemLength v) noexcept;
std::string_view canonical_name(SleeveLength v) noexcept;
std::string_view canonical_name(HemType v) noexcept;
std::string_view canonical_name(AttributeKind kind) noexcept;
std::string_view canonical_name(AttributeKind kind, std::size_t index) noexcept;

// Human-readable label as printed in reports ("Below Midcalf").
std::string_view display_label(AttributeKind kind, std::size_t index) noexcept;
std::string_view display_label(AttributeKind kind) noexcept;

template <typename A>
std::optional<A> parse_name(std::string_view name);

std::optional<std::size_t> parse_index(AttributeKind kind, std::string_view name);

// Why an algorithm produced no answer.
enum class Reason {
  NoBandMatched,
  NonFiniteRatio,
  MissingKeypoint,
  DegenerateLegs,
  DegenerateLimb,
  HemEndNotFound,
};

std::string_view canonical_name(Reason r) noexcept;
std::optional<Reason> parse_reason(std::string_view name);

template <typename A>
class Classified {
 public:
  constexpr Classified(A value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Classified unclassified(Reason why) { return Classified(why); }

  constexpr bool has_value() const noexcept { return value_.has_value(); }
  constexpr explicit operator bool() const noexcept { return has_value(); }
  constexpr A value() const { return value_.value(); }
  constexpr A operator*() const { return *value_; }
  // Only meaningful when !has_value().
  constexpr Reason reason() const noexcept { return reason_; }

  friend constexpr bool operator==(const Classified& a, const Classified& b) {
    if (a.has_value() != b.has_value()) return false;
    return a.has_value() ? *a.value_ == *b.value_ : a.reason_ == b.reason_;
  }

 private:
  constexpr explicit Classified(Reason why) : reason_(why) {}

  std::optional<A> value_;
  Reason reason_ = Reason::NoBandMatched;
};

struct AttributeSet {
  Classified<HemLength> hem_length = Classified<HemLength>::unclassified(Reason::NoBandMatched);
  Classified<SleeveLength> sleeve_length = Classified<SleeveLength>::unclassified(Reason::NoBandMatched);
  Classified<HemType> hem_type = Classified<HemType>::unclassified(Reason::NoBandMatched);
  // NaN when the ratio could not be computed.
  double hem_ratio = std::numeric_limits<double>::quiet_NaN();
};

// "<hem type> <hem length> dress with <sleeve> sleeves"; unclassified parts
// read "unclassified".
std::string describe(const AttributeSet& attrs);

// "knee" or "unclassified:<reason>".
template <typename A>
std::string record_value(const Classified<A>& c) {
  if (c) return std::string(canonical_name(*c));
  return "unclassified:" + std::string(canonical_name(c.reason()));
}

}  // namespace dressgrade
