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
#include "treatise/raster/image.hpp"

#include <algorithm>
#include <string>

#include "treatise/common/error.hpp"

namespace treatise::raster {

ImageGrid::ImageGrid(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (width < 1 || height < 1) {
        throw SchemaError("/", "image dimensions must be positive");
    }
    if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw SchemaError("/", "pixel count " + std::to_string(data_.size()) + " does not match " +
                                   std::to_string(width) + "x" + std::to_string(height));
    }
}

ImageGrid::ImageGrid(int width, int height, std::uint8_t fill)
    : ImageGrid(width, height,
                std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                              static_cast<std::size_t>(std::max(height, 0)),
                                          fill)) {}

std::int32_t MarkerMap::count() const {
    std::int32_t k = 0;
    for (auto v : labels) k = std::max(k, v);
    return k;
}

void MarkerMap::check() const {
    if (width < 1 || height < 1 ||
        labels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw SchemaError("/", "marker map size mismatch");
    }
    const std::int32_t k = count();
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (auto v : labels) {
        if (v < 0) throw SchemaError("/", "negative marker label");
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::int32_t i = 1; i <= k; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            throw SchemaError("/", "marker labels are not contiguous: missing " + std::to_string(i));
        }
    }
}

}  // namespace treatise::raster
