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

#include "dressgrade/kernels/kernels.hpp"

namespace dressgrade::kernels {

namespace {

std::size_t select_label_scalar(std::span<const std::uint8_t> labels, std::uint8_t target,
                                std::span<std::uint8_t> out) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::uint8_t on = labels[i] == target ? 1 : 0;
    out[i] = on;
    hits += on;
  }
  return hits;
}

std::size_t count_nonzero_scalar(std::span<const std::uint8_t> bytes) {
  std::size_t n = 0;
  for (std::uint8_t b : bytes) n += b != 0;
  return n;
}

RowSpan row_span_scalar(std::span<const std::uint8_t> row) {
  RowSpan span;
  const auto n = static_cast<std::ptrdiff_t>(row.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (row[i]) {
      span.first = i;
      break;
    }
  }
  if (span.first > n - 1) return RowSpan{};
  for (std::ptrdiff_t i = n - 1; i >= 0; --i) {
    if (row[i]) {
      span.last = i;
      break;
    }
  }
  return span;
}

float max_reach_scalar(std::span<const std::uint8_t> row, std::ptrdiff_t x_begin,
                       std::ptrdiff_t x_end, float y, const SegmentTable& segs,
                       float radius_sq) {
  float best_reach = -1.0f;
  for (std::ptrdiff_t x = x_begin; x < x_end; ++x) {
    if (!row[x]) continue;
    const float px = static_cast<float>(x);
    float best_d2 = 0.0f;
    float best_s = 0.0f;
    for (std::size_t k = 0; k < segs.count; ++k) {
      const float wx = px - segs.ax[k];
      const float wy = y - segs.ay[k];
      const float dot = wx * segs.dx[k] + wy * segs.dy[k];
      float t = dot / segs.len_sq[k];
      t = t < 1.0f ? t : 1.0f;
      t = t > 0.0f ? t : 0.0f;
      const float cx = wx - t * segs.dx[k];
      const float cy = wy - t * segs.dy[k];
      const float d2 = cx * cx + cy * cy;
      const float s = segs.cum[k] + t * segs.len[k];
      if (k == 0 || d2 < best_d2 || (d2 == best_d2 && s < best_s)) {
        best_d2 = d2;
        best_s = s;
      }
    }
    if (best_d2 <= radius_sq && best_s > best_reach) best_reach = best_s;
  }
  return best_reach;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{
      "scalar", select_label_scalar, count_nonzero_scalar, row_span_scalar, max_reach_scalar,
  };
  return table;
}

}  // namespace dressgrade::kernels
