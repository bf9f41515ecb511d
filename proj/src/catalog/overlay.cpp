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
#include "treatise/catalog/overlay.hpp"

#include "treatise/common/error.hpp"

namespace treatise::catalog {

raster::ImageGrid render_overlay(const raster::ImageGrid& grid, const ImageRecord& record) {
    if (grid.width() != record.width || grid.height() != record.height) {
        throw SchemaError("/width", "image is " + std::to_string(grid.width()) + "x" + std::to_string(grid.height()) +
                                        ", record frame is " + std::to_string(record.width) + "x" +
                                        std::to_string(record.height));
    }
    raster::ImageGrid out = grid;
    for (const auto& s : record.segments) {
        for (const auto& p : s.contour) {
            if (out.contains(p.x, p.y)) out.at(p.x, p.y) = 255;
        }
    }
    for (const auto& s : record.segments) {
        const auto& b = s.bbox;
        for (int x = b.x; x < b.x + b.w; ++x) {
            if (out.contains(x, b.y)) out.at(x, b.y) = 0;
            if (out.contains(x, b.y + b.h - 1)) out.at(x, b.y + b.h - 1) = 0;
        }
        for (int y = b.y; y < b.y + b.h; ++y) {
            if (out.contains(b.x, y)) out.at(b.x, y) = 0;
            if (out.contains(b.x + b.w - 1, y)) out.at(b.x + b.w - 1, y) = 0;
        }
    }
    return out;
}

}  // namespace treatise::catalog
