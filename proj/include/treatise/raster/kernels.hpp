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
#pragma once

// Per-ISA row kernels behind gradient_magnitude. Not part of the public API;
// exposed so the equivalence tests can drive each variant directly.

#include <cstdint>

namespace treatise::raster::kernels {

/// Computes one output row from the (edge-replicated) rows above, at and below it.
/// Border columns replicate the edge pixel.
void sobel_row_scalar(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                      int width, std::uint8_t* out);

#if defined(TREATISE_HAVE_AVX2)
void sobel_row_avx2(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                    int width, std::uint8_t* out);
#endif

/// Scalar magnitude for a single pixel given its Sobel responses.
inline std::uint8_t sobel_magnitude(int gx, int gy) {
    const float sq = static_cast<float>(gx * gx + gy * gy);
    const float m = __builtin_floorf(__builtin_sqrtf(sq) * 0.25f + 0.5f);
    return m >= 255.0f ? std::uint8_t{255} : static_cast<std::uint8_t>(m);
}

}  // namespace treatise::raster::kernels
