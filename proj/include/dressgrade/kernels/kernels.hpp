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

// Data-parallel pixel kernels. Every kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant. The variant is picked once at runtime from
// the CPU feature bits; DRESSGRADE_KERNELS=scalar forces the reference path.
// Both variants produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dressgrade::kernels {

// Inclusive [first, last] index of nonzero bytes; first > last when none.
struct RowSpan {
  std::ptrdiff_t first = 1;
  std::ptrdiff_t last = 0;
  bool empty() const noexcept { return first > last; }
};

// Up to kMaxSegments polyline segments, pre-digested for projection.
inline constexpr std::size_t kMaxSegments = 8;

struct SegmentTable {
  std::size_t count = 0;
  float ax[kMaxSegments]{};
  float ay[kMaxSegments]{};
  float dx[kMaxSegments]{};
  float dy[kMaxSegments]{};
  float len_sq[kMaxSegments]{};
  float len[kMaxSegments]{};
  float cum[kMaxSegments]{};  // arc length at segment start
};

struct KernelTable {
  std::string_view name;

  // out[i] = (labels[i] == target); returns the number of matches.
  std::size_t (*select_label)(std::span<const std::uint8_t> labels, std::uint8_t target,
                              std::span<std::uint8_t> out);

  std::size_t (*count_nonzero)(std::span<const std::uint8_t> bytes);

  RowSpan (*row_span)(std::span<const std::uint8_t> row);

  // Over pixels x in [x_begin, x_end) of row y with row[x] != 0: the closest
  // point on the polyline (ties to smaller arc length) is found, and if its
  // squared distance is <= radius_sq its arc length competes for the max.
  // Returns -1 when no pixel qualifies.
  float (*max_reach)(std::span<const std::uint8_t> row, std::ptrdiff_t x_begin,
                     std::ptrdiff_t x_end, float y, const SegmentTable& segs, float radius_sq);
};

const KernelTable& scalar();

// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2();

// The table selected for this process.
const KernelTable& active();

}  // namespace dressgrade::kernels
