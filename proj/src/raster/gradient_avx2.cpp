// Copyright 2026 The Treatise Authors
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
#include <immintrin.h>

#include "treatise/raster/kernels.hpp"

namespace treatise::raster::kernels {

namespace {

inline __m256i load16(const std::uint8_t* p) {
    return _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

// 8 lanes of int32 squared-magnitude -> rounded, clamped magnitude as int32.
inline __m256i magnitude8(__m256i sq) {
    const __m256 s = _mm256_sqrt_ps(_mm256_cvtepi32_ps(sq));
    const __m256 m = _mm256_floor_ps(_mm256_add_ps(_mm256_mul_ps(s, _mm256_set1_ps(0.25f)), _mm256_set1_ps(0.5f)));
    return _mm256_cvttps_epi32(_mm256_min_ps(m, _mm256_set1_ps(255.0f)));
}

}  // namespace

void sobel_row_avx2(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                    int width, std::uint8_t* out) {
    if (width < 18) {
        sobel_row_scalar(above, row, below, width, out);
        return;
    }
    // Interior columns 1..width-2 in blocks of 16; the loads at x-1 and x+1 stay in bounds.
    int x = 1;
    for (; x + 16 <= width - 1; x += 16) {
        const __m256i al = load16(above + x - 1), ac = load16(above + x), ar = load16(above + x + 1);
        const __m256i rl = load16(row + x - 1), rr = load16(row + x + 1);
        const __m256i bl = load16(below + x - 1), bc = load16(below + x), br = load16(below + x + 1);

        const __m256i gx = _mm256_add_epi16(
            _mm256_add_epi16(_mm256_sub_epi16(ar, al), _mm256_slli_epi16(_mm256_sub_epi16(rr, rl), 1)),
            _mm256_sub_epi16(br, bl));
        const __m256i sum_b = _mm256_add_epi16(_mm256_add_epi16(bl, br), _mm256_slli_epi16(bc, 1));
        const __m256i sum_a = _mm256_add_epi16(_mm256_add_epi16(al, ar), _mm256_slli_epi16(ac, 1));
        const __m256i gy = _mm256_sub_epi16(sum_b, sum_a);

        // gx^2 + gy^2 per lane: interleave (gx, gy) pairs and multiply-add.
        const __m256i lo_pairs = _mm256_unpacklo_epi16(gx, gy);
        const __m256i hi_pairs = _mm256_unpackhi_epi16(gx, gy);
        const __m256i sq_lo = _mm256_madd_epi16(lo_pairs, lo_pairs);
        const __m256i sq_hi = _mm256_madd_epi16(hi_pairs, hi_pairs);

        const __m256i m_lo = magnitude8(sq_lo);
        const __m256i m_hi = magnitude8(sq_hi);
        // unpacklo/hi interleave within 128-bit lanes; packs reverses that pairing.
        const __m256i packed16 = _mm256_packus_epi32(m_lo, m_hi);
        const __m128i packed8 = _mm_packus_epi16(_mm256_castsi256_si128(packed16),
                                                 _mm256_extracti128_si256(packed16, 1));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + x), packed8);
    }

    // Border columns and the tail go through the scalar formula.
    auto scalar_at = [&](int c) {
        const int l = c > 0 ? c - 1 : 0;
        const int r = c + 1 < width ? c + 1 : width - 1;
        const int gx = (above[r] - above[l]) + 2 * (row[r] - row[l]) + (below[r] - below[l]);
        const int gy = (below[l] + 2 * below[c] + below[r]) - (above[l] + 2 * above[c] + above[r]);
        out[c] = sobel_magnitude(gx, gy);
    };
    scalar_at(0);
    for (; x < width; ++x) scalar_at(x);
}

}  // namespace treatise::raster::kernels
