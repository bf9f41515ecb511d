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
#include "treatise/raster/rle.hpp"

#include <numeric>
#include <string>

#include "treatise/common/error.hpp"

namespace treatise::raster {

MaskRLE rle_encode(std::span<const std::uint8_t> bits, int width, int height) {
    if (width < 0 || height < 0 ||
        bits.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw SchemaError("/mask", "bit count does not match frame size");
    }
    MaskRLE rle{width, height, {}};
    bool current = false;
    std::uint32_t run = 0;
    for (auto b : bits) {
        const bool set = b != 0;
        if (set != current) {
            rle.counts.push_back(run);
            run = 0;
            current = set;
        }
        ++run;
    }
    rle.counts.push_back(run);
    return rle;
}

MaskRLE rle_from_indices(std::span<const std::size_t> sorted_indices, int width, int height) {
    const std::size_t total = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    MaskRLE rle{width, height, {}};
    std::size_t cursor = 0;  // first pixel not yet covered by a run
    std::size_t k = 0;
    while (k < sorted_indices.size()) {
        const std::size_t begin = sorted_indices[k];
        std::size_t end = begin + 1;
        ++k;
        while (k < sorted_indices.size() && sorted_indices[k] == end) {
            ++end;
            ++k;
        }
        rle.counts.push_back(static_cast<std::uint32_t>(begin - cursor));
        rle.counts.push_back(static_cast<std::uint32_t>(end - begin));
        cursor = end;
    }
    if (cursor < total || rle.counts.empty()) {
        rle.counts.push_back(static_cast<std::uint32_t>(total - cursor));
    }
    return rle;
}

std::vector<std::uint8_t> rle_decode(const MaskRLE& rle) {
    const std::uint64_t total = static_cast<std::uint64_t>(rle.width) * static_cast<std::uint64_t>(rle.height);
    const std::uint64_t sum = std::accumulate(rle.counts.begin(), rle.counts.end(), std::uint64_t{0});
    if (sum != total) {
        throw SchemaError("/mask/counts", "run lengths sum to " + std::to_string(sum) + ", frame has " +
                                              std::to_string(total) + " pixels");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(total);
    std::uint8_t value = 0;
    for (auto c : rle.counts) {
        bits.insert(bits.end(), c, value);
        value ^= 1;
    }
    return bits;
}

std::uint64_t rle_area(const MaskRLE& rle) {
    std::uint64_t area = 0;
    for (std::size_t i = 1; i < rle.counts.size(); i += 2) area += rle.counts[i];
    return area;
}

}  // namespace treatise::raster
