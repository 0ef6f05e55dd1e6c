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

// Label maps in the LIP human-parsing encoding, the thresholded dress mask,
// connected components and bounding boxes.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dressgrade/raster.hpp"

namespace dressgrade {

// Canonical working resolution; every pixel constant is expressed in it.
inline constexpr int kCanonicalSize = 320;

// 19 part labels plus background.
enum class LipClass : std::uint8_t {
  Background = 0,
  Hat,
  Hair,
  Glove,
  Sunglasses,
  UpperClothes,
  Dress,
  Coat,
  Socks,
  Pants,
  Jumpsuits,
  Scarf,
  Skirt,
  Face,
  LeftArm,
  RightArm,
  LeftLeg,
  RightLeg,
  LeftShoe,
  RightShoe,
};

inline constexpr std::size_t kLipClassCount = 20;

struct PaletteEntry {
  LipClass cls;
  std::string_view name;
  Rgb color;
};

// Canonical colour per class, in class-ID order.
std::span<const PaletteEntry> lip_palette() noexcept;

Rgb lip_color(LipClass cls) noexcept;
std::optional<LipClass> lip_class_from_color(Rgb color) noexcept;

class LabelMap {
 public:
  LabelMap(int width, int height, LipClass fill = LipClass::Background);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  LipClass at(int x, int y) const noexcept {
    return static_cast<LipClass>(labels_[static_cast<std::size_t>(y) * width_ + x]);
  }
  void set(int x, int y, LipClass c) noexcept {
    labels_[static_cast<std::size_t>(y) * width_ + x] = static_cast<std::uint8_t>(c);
  }

  std::span<const std::uint8_t> raw() const noexcept { return labels_; }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> labels_;
};

class BinaryMask {
 public:
  BinaryMask(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool at(int x, int y) const noexcept { return bits_[static_cast<std::size_t>(y) * width_ + x] != 0; }
  void set(int x, int y, bool on) noexcept {
    bits_[static_cast<std::size_t>(y) * width_ + x] = on ? 1 : 0;
  }

  std::span<const std::uint8_t> row(int y) const noexcept {
    return std::span<const std::uint8_t>(bits_).subspan(static_cast<std::size_t>(y) * width_,
                                                        static_cast<std::size_t>(width_));
  }
  std::span<const std::uint8_t> raw() const noexcept { return bits_; }
  std::span<std::uint8_t> raw_mut() noexcept { return bits_; }

  std::size_t on_count() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

// Origin top-left, y grows downward; all four edges inclusive.
struct BoundingBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  int width() const noexcept { return x_max - x_min; }
  int height() const noexcept { return y_max - y_min; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Throws Error(UnknownLabel) naming the first offending pixel.
LabelMap decode_label_map(const RgbImage& image);
RgbImage encode_label_map(const LabelMap& map);

BinaryMask threshold_mask(const LabelMap& map, LipClass target);

// Throws Error(EmptyMask).
BoundingBox bounding_box(const BinaryMask& mask);

struct ComponentResult {
  BinaryMask mask;
  int component_count = 0;
};

// Largest 4-connected component; ties go to the component whose topmost
// row (then leftmost pixel in it) comes first. Throws Error(EmptyMask).
ComponentResult largest_component(const BinaryMask& mask);

// Max y over on-pixels with |x - x_center| <= half_width; the band is clipped
// to the frame. Throws Error(NoPixelInBand).
int lowest_on_y_in_band(const BinaryMask& mask, int x_center, int half_width);

// Nearest-neighbour resample.
LabelMap resize_nearest(const LabelMap& map, int width, int height);

}  // namespace dressgrade
