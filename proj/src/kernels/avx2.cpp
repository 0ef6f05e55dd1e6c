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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include "dressgrade/kernels/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace dressgrade::kernels {

namespace {

std::size_t select_label_avx2(std::span<const std::uint8_t> labels, std::uint8_t target,
                              std::span<std::uint8_t> out) {
  const std::size_t n = labels.size();
  const __m256i want = _mm256_set1_epi8(static_cast<char>(target));
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t hits = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(labels.data() + i));
    const __m256i eq = _mm256_cmpeq_epi8(v, want);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_and_si256(eq, one));
    hits += static_cast<std::size_t>(
        std::popcount(static_cast<std::uint32_t>(_mm256_movemask_epi8(eq))));
  }
  for (; i < n; ++i) {
    const std::uint8_t on = labels[i] == target ? 1 : 0;
    out[i] = on;
    hits += on;
  }
  return hits;
}

std::size_t count_nonzero_avx2(std::span<const std::uint8_t> bytes) {
  const std::size_t n = bytes.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bytes.data() + i));
    const auto zeros = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    count += 32 - static_cast<std::size_t>(std::popcount(zeros));
  }
  for (; i < n; ++i) count += bytes[i] != 0;
  return count;
}

// Bit i set where byte i of the 32-byte block is nonzero.
inline std::uint32_t nonzero_bits(const std::uint8_t* p) {
  const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  return ~static_cast<std::uint32_t>(
      _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, _mm256_setzero_si256())));
}

RowSpan row_span_avx2(std::span<const std::uint8_t> row) {
  const auto n = static_cast<std::ptrdiff_t>(row.size());
  const std::uint8_t* p = row.data();
  RowSpan span;

  std::ptrdiff_t i = 0;
  bool found = false;
  for (; i + 32 <= n; i += 32) {
    const std::uint32_t bits = nonzero_bits(p + i);
    if (bits) {
      span.first = i + std::countr_zero(bits);
      found = true;
      break;
    }
  }
  if (!found) {
    for (; i < n; ++i) {
      if (p[i]) {
        span.first = i;
        found = true;
        break;
      }
    }
  }
  if (!found) return RowSpan{};

  // Backward: scalar tail first, then whole blocks.
  std::ptrdiff_t j = n;
  const std::ptrdiff_t tail = n % 32;
  for (std::ptrdiff_t k = n - 1; k >= n - tail; --k) {
    if (p[k]) {
      span.last = k;
      return span;
    }
  }
  j = n - tail;
  for (; j >= 32; j -= 32) {
    const std::uint32_t bits = nonzero_bits(p + j - 32);
    if (bits) {
      span.last = j - 32 + (31 - std::countl_zero(bits));
      return span;
    }
  }
  span.last = span.first;
  return span;
}

float max_reach_avx2(std::span<const std::uint8_t> row, std::ptrdiff_t x_begin,
                     std::ptrdiff_t x_end, float y, const SegmentTable& segs, float radius_sq) {
  const __m256 lane = _mm256_setr_ps(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256 one = _mm256_set1_ps(1.0f);
  const __m256 zero = _mm256_setzero_ps();
  const __m256 vy = _mm256_set1_ps(y);
  const __m256 vr2 = _mm256_set1_ps(radius_sq);
  __m256 reach = _mm256_set1_ps(-1.0f);

  std::ptrdiff_t x = x_begin;
  for (; x + 8 <= x_end; x += 8) {
    std::uint64_t raw;
    __builtin_memcpy(&raw, row.data() + x, 8);
    if (raw == 0) continue;
    const __m256i bytes = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(&raw)));
    const __m256 on = _mm256_castsi256_ps(
        _mm256_xor_si256(_mm256_cmpeq_epi32(bytes, _mm256_setzero_si256()), _mm256_set1_epi32(-1)));

    const __m256 px = _mm256_add_ps(_mm256_set1_ps(static_cast<float>(x)), lane);
    __m256 best_d2 = zero;
    __m256 best_s = zero;
    for (std::size_t k = 0; k < segs.count; ++k) {
      const __m256 dx = _mm256_set1_ps(segs.dx[k]);
      const __m256 dy = _mm256_set1_ps(segs.dy[k]);
      const __m256 wx = _mm256_sub_ps(px, _mm256_set1_ps(segs.ax[k]));
      const __m256 wy = _mm256_sub_ps(vy, _mm256_set1_ps(segs.ay[k]));
      const __m256 dot = _mm256_add_ps(_mm256_mul_ps(wx, dx), _mm256_mul_ps(wy, dy));
      __m256 t = _mm256_div_ps(dot, _mm256_set1_ps(segs.len_sq[k]));
      t = _mm256_min_ps(t, one);
      t = _mm256_max_ps(t, zero);
      const __m256 cx = _mm256_sub_ps(wx, _mm256_mul_ps(t, dx));
      const __m256 cy = _mm256_sub_ps(wy, _mm256_mul_ps(t, dy));
      const __m256 d2 = _mm256_add_ps(_mm256_mul_ps(cx, cx), _mm256_mul_ps(cy, cy));
      const __m256 s = _mm256_add_ps(_mm256_set1_ps(segs.cum[k]), _mm256_mul_ps(t, _mm256_set1_ps(segs.len[k])));
      if (k == 0) {
        best_d2 = d2;
        best_s = s;
        continue;
      }
      const __m256 closer = _mm256_or_ps(
          _mm256_cmp_ps(d2, best_d2, _CMP_LT_OQ),
          _mm256_and_ps(_mm256_cmp_ps(d2, best_d2, _CMP_EQ_OQ), _mm256_cmp_ps(s, best_s, _CMP_LT_OQ)));
      best_d2 = _mm256_blendv_ps(best_d2, d2, closer);
      best_s = _mm256_blendv_ps(best_s, s, closer);
    }
    const __m256 take = _mm256_and_ps(on, _mm256_cmp_ps(best_d2, vr2, _CMP_LE_OQ));
    reach = _mm256_max_ps(reach, _mm256_blendv_ps(_mm256_set1_ps(-1.0f), best_s, take));
  }

  alignas(32) float lanes[8];
  _mm256_store_ps(lanes, reach);
  float best = -1.0f;
  for (float v : lanes) best = v > best ? v : best;
  if (x < x_end) {
    const float rest = scalar().max_reach(row, x, x_end, y, segs, radius_sq);
    best = rest > best ? rest : best;
  }
  return best;
}

}  // namespace

const KernelTable* avx2_table_impl() {
  static const KernelTable table{
      "avx2", select_label_avx2, count_nonzero_avx2, row_span_avx2, max_reach_avx2,
  };
  return &table;
}

}  // namespace dressgrade::kernels

#else

namespace dressgrade::kernels {
const KernelTable* avx2_table_impl() { return nullptr; }
}  // namespace dressgrade::kernels

#endif
