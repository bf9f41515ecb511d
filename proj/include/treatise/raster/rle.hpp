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

#include <cstdint>
#include <span>
#include <vector>

namespace treatise::raster {

/// Row-major run-length mask over a full image frame. Runs alternate
/// 0,1,0,... starting with the (possibly empty) run of leading zeros.
struct MaskRLE {
    int width = 0;
    int height = 0;
    std::vector<std::uint32_t> counts;

    friend bool operator==(const MaskRLE&, const MaskRLE&) = default;
};

/// `bits` holds one byte per pixel, nonzero meaning set; size must be width*height.
MaskRLE rle_encode(std::span<const std::uint8_t> bits, int width, int height);

/// Builds the RLE directly from ascending, duplicate-free row-major pixel indices.
MaskRLE rle_from_indices(std::span<const std::size_t> sorted_indices, int width, int height);

/// Throws SchemaError if the counts do not sum to width*height.
std::vector<std::uint8_t> rle_decode(const MaskRLE& rle);

/// Number of set pixels (sum of odd-indexed runs).
std::uint64_t rle_area(const MaskRLE& rle);

}  // namespace treatise::raster
