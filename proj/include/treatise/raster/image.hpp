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

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Row-major 8-bit grayscale raster. Construction enforces width, height >= 1
/// and data.size() == width * height.
class ImageGrid {
public:
    ImageGrid(int width, int height, std::vector<std::uint8_t> data);
    ImageGrid(int width, int height, std::uint8_t fill);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }

    std::uint8_t at(int x, int y) const { return data_[index(x, y)]; }
    std::uint8_t& at(int x, int y) { return data_[index(x, y)]; }
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }
    bool contains(int x, int y) const noexcept { return x >= 0 && y >= 0 && x < width_ && y < height_; }

    std::span<const std::uint8_t> pixels() const noexcept { return data_; }
    std::span<std::uint8_t> pixels() noexcept { return data_; }

    friend bool operator==(const ImageGrid&, const ImageGrid&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> data_;
};

/// Integer label raster shared by marker and segment maps.
struct LabelGrid {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;

    std::int32_t at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
    }
    friend bool operator==(const LabelGrid&, const LabelGrid&) = default;
};

/// Watershed seeds: 0 = unmarked, otherwise labels 1..K, each present.
struct MarkerMap : LabelGrid {
    /// Largest label; the contiguity invariant makes it the marker count.
    std::int32_t count() const;
    /// Throws SchemaError if labels are negative, non-contiguous or the size is off.
    void check() const;
};

/// Watershed output: 0 = line pixel, k >= 1 = region k.
struct SegmentMap : LabelGrid {};

}  // namespace treatise::raster
