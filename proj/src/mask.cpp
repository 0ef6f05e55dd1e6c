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

#include "dressgrade/mask.hpp"

#include <algorithm>
#include <string>

#include "dressgrade/error.hpp"
#include "dressgrade/kernels/kernels.hpp"

namespace dressgrade {

namespace {

constexpr std::array<PaletteEntry, kLipClassCount> kPalette{{
    {LipClass::Background, "background", {0, 0, 0}},
    {LipClass::Hat, "hat", {128, 0, 0}},
    {LipClass::Hair, "hair", {255, 0, 0}},
    {LipClass::Glove, "glove", {0, 85, 0}},
    {LipClass::Sunglasses, "sunglasses", {170, 0, 51}},
    {LipClass::UpperClothes, "upper_clothes", {255, 85, 0}},
    {LipClass::Dress, "dress", {0, 0, 85}},
    {LipClass::Coat, "coat", {0, 119, 221}},
    {LipClass::Socks, "socks", {85, 85, 0}},
    {LipClass::Pants, "pants", {0, 85, 85}},
    {LipClass::Jumpsuits, "jumpsuits", {85, 51, 0}},
    {LipClass::Scarf, "scarf", {52, 86, 128}},
    {LipClass::Skirt, "skirt", {0, 128, 0}},
    {LipClass::Face, "face", {0, 0, 255}},
    {LipClass::LeftArm, "left_arm", {51, 170, 221}},
    {LipClass::RightArm, "right_arm", {0, 255, 255}},
    {LipClass::LeftLeg, "left_leg", {85, 255, 170}},
    {LipClass::RightLeg, "right_leg", {170, 255, 85}},
    {LipClass::LeftShoe, "left_shoe", {255, 255, 0}},
    {LipClass::RightShoe, "right_shoe", {255, 170, 0}},
}};

// Some LIP renderings colour the right leg this way; accepted on decode only.
constexpr Rgb kRightLegAlias{255, 134, 255};

void check_dims(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::MalformedDocument, "raster dimensions must be positive");
  }
}

}  // namespace

std::span<const PaletteEntry> lip_palette() noexcept { return kPalette; }

Rgb lip_color(LipClass cls) noexcept { return kPalette[static_cast<std::size_t>(cls)].color; }

std::optional<LipClass> lip_class_from_color(Rgb color) noexcept {
  for (const auto& e : kPalette) {
    if (e.color == color) return e.cls;
  }
  if (color == kRightLegAlias) return LipClass::RightLeg;
  return std::nullopt;
}

LabelMap::LabelMap(int width, int height, LipClass fill) : width_(width), height_(height) {
  check_dims(width, height);
  labels_.assign(static_cast<std::size_t>(width) * height, static_cast<std::uint8_t>(fill));
}

BinaryMask::BinaryMask(int width, int height) : width_(width), height_(height) {
  check_dims(width, height);
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::size_t BinaryMask::on_count() const { return kernels::active().count_nonzero(bits_); }

LabelMap decode_label_map(const RgbImage& image) {
  LabelMap map(image.width(), image.height());
  // Label maps are dominated by long runs of one colour.
  Rgb last_color = lip_color(LipClass::Background);
  LipClass last_class = LipClass::Background;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const Rgb c = image.at(x, y);
      if (!(c == last_color)) {
        auto cls = lip_class_from_color(c);
        if (!cls) {
          throw Error(ErrorCode::UnknownLabel, "rgb (" + std::to_string(c.r) + "," + std::to_string(c.g) + "," +
                                                   std::to_string(c.b) + ") at (" + std::to_string(x) + "," +
                                                   std::to_string(y) + ")");
        }
        last_color = c;
        last_class = *cls;
      }
      map.set(x, y, last_class);
    }
  }
  return map;
}

RgbImage encode_label_map(const LabelMap& map) {
  RgbImage image(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) image.set(x, y, lip_color(map.at(x, y)));
  }
  return image;
}

BinaryMask threshold_mask(const LabelMap& map, LipClass target) {
  BinaryMask mask(map.width(), map.height());
  kernels::active().select_label(map.raw(), static_cast<std::uint8_t>(target), mask.raw_mut());
  return mask;
}

BoundingBox bounding_box(const BinaryMask& mask) {
  const auto& k = kernels::active();
  BoundingBox box{mask.width(), mask.height(), -1, -1};
  for (int y = 0; y < mask.height(); ++y) {
    const auto span = k.row_span(mask.row(y));
    if (span.empty()) continue;
    if (box.y_max < 0) box.y_min = y;
    box.y_max = y;
    box.x_min = std::min(box.x_min, static_cast<int>(span.first));
    box.x_max = std::max(box.x_max, static_cast<int>(span.last));
  }
  if (box.y_max < 0) throw Error(ErrorCode::EmptyMask, "mask has no on-pixel");
  return box;
}

ComponentResult largest_component(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  const std::size_t n = static_cast<std::size_t>(w) * h;
  std::vector<int> label(n, -1);
  std::vector<std::size_t> stack;
  int count = 0;
  int best = -1;
  std::size_t best_size = 0;
  int best_y_min = 0;
  int best_x_min = 0;

  for (std::size_t seed = 0; seed < n; ++seed) {
    if (!mask.raw()[seed] || label[seed] >= 0) continue;
    const int id = count++;
    std::size_t size = 0;
    const int y_min = static_cast<int>(seed / w);  // raster order: seed row is the top row
    int x_min = w;
    label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      ++size;
      const int x = static_cast<int>(i % w);
      const int y = static_cast<int>(i / w);
      x_min = std::min(x_min, x);
      auto visit = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) return;
        const std::size_t j = static_cast<std::size_t>(ny) * w + nx;
        if (mask.raw()[j] && label[j] < 0) {
          label[j] = id;
          stack.push_back(j);
        }
      };
      visit(x - 1, y);
      visit(x + 1, y);
      visit(x, y - 1);
      visit(x, y + 1);
    }
    const bool wins = size > best_size ||
                      (size == best_size && std::pair(y_min, x_min) < std::pair(best_y_min, best_x_min));
    if (wins) {
      best_size = size;
      best = id;
      best_y_min = y_min;
      best_x_min = x_min;
    }
  }
  if (count == 0) throw Error(ErrorCode::EmptyMask, "mask has no on-pixel");

  ComponentResult result{BinaryMask(w, h), count};
  auto out = result.mask.raw_mut();
  for (std::size_t i = 0; i < n; ++i) out[i] = label[i] == best ? 1 : 0;
  return result;
}

int lowest_on_y_in_band(const BinaryMask& mask, int x_center, int half_width) {
  const int x0 = std::max(0, x_center - std::max(0, half_width));
  const int x1 = std::min(mask.width() - 1, x_center + std::max(0, half_width));
  if (x0 <= x1) {
    const auto& k = kernels::active();
    for (int y = mask.height() - 1; y >= 0; --y) {
      const auto band = mask.row(y).subspan(static_cast<std::size_t>(x0), static_cast<std::size_t>(x1 - x0 + 1));
      if (!k.row_span(band).empty()) return y;
    }
  }
  throw Error(ErrorCode::NoPixelInBand,
              "no on-pixel within " + std::to_string(half_width) + " px of x=" + std::to_string(x_center));
}

LabelMap resize_nearest(const LabelMap& map, int width, int height) {
  if (width == map.width() && height == map.height()) return map;
  LabelMap out(width, height);
  for (int y = 0; y < height; ++y) {
    const int sy = std::min(map.height() - 1,
                            static_cast<int>((static_cast<long long>(2 * y + 1) * map.height()) / (2LL * height)));
    for (int x = 0; x < width; ++x) {
      const int sx = std::min(map.width() - 1,
                              static_cast<int>((static_cast<long long>(2 * x + 1) * map.width()) / (2LL * width)));
      out.set(x, y, map.at(sx, sy));
    }
  }
  return out;
}

}  // namespace dressgrade
