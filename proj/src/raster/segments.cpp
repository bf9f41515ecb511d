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
#include "treatise/raster/segments.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace treatise::raster {

namespace {

struct Extent {
    int x0 = std::numeric_limits<int>::max();
    int y0 = std::numeric_limits<int>::max();
    int x1 = -1;
    int y1 = -1;
    std::vector<std::size_t> pixels;

    void add(int x, int y, std::size_t index) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
        pixels.push_back(index);
    }
    BoundingBox box() const { return {x0, y0, x1 - x0 + 1, y1 - y0 + 1}; }
};

}  // namespace

std::vector<Segment> extract_segments(const SegmentMap& map) {
    const int w = map.width;
    const int h = map.height;
    std::map<std::int32_t, Extent> regions;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x);
            const std::int32_t id = map.labels[i];
            if (id > 0) regions[id].add(x, y, i);
        }
    }

    std::vector<Segment> segments;
    segments.reserve(regions.size());
    for (const auto& [id, extent] : regions) {
        Segment s;
        s.id = id;
        s.bbox = extent.box();
        s.area = extent.pixels.size();
        s.mask = rle_from_indices(extent.pixels, w, h);
        const std::int32_t want = id;
        s.contour = trace_contour(s.bbox, [&](int x, int y) {
            return x >= 0 && y >= 0 && x < w && y < h && map.at(x, y) == want;
        });
        segments.push_back(std::move(s));
    }
    return segments;
}

Segment segment_from_mask(std::int32_t id, const MaskRLE& mask) {
    const auto bits = rle_decode(mask);
    const int w = mask.width;
    const int h = mask.height;
    Extent extent;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x);
            if (bits[i]) extent.add(x, y, i);
        }
    }
    Segment s;
    s.id = id;
    s.mask = mask;
    s.area = extent.pixels.size();
    if (s.area == 0) return s;
    s.bbox = extent.box();
    s.contour = trace_contour(s.bbox, [&](int x, int y) {
        return x >= 0 && y >= 0 && x < w && y < h &&
               bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)] != 0;
    });
    return s;
}

}  // namespace treatise::raster
