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
#include <vector>

#include "treatise/raster/image.hpp"
#include "treatise/raster/rle.hpp"

namespace treatise::raster {

/// Axis-aligned pixel box; (x, y) is the top-left pixel, w and h >= 1.
struct BoundingBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }
    bool fits(int width, int height) const {
        return w >= 1 && h >= 1 && x >= 0 && y >= 0 && x + w <= width && y + h <= height;
    }
    bool contains(int px, int py) const { return px >= x && py >= y && px < x + w && py < y + h; }
    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct Segment {
    std::int32_t id = 0;
    BoundingBox bbox;
    MaskRLE mask;
    std::uint64_t area = 0;
    /// Boundary pixels: set pixels with at least one unset or out-of-frame 4-neighbour.
    std::vector<Point> contour;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// One segment per region id present in `map`, ascending by id. Line pixels
/// (label 0) belong to no segment.
std::vector<Segment> extract_segments(const SegmentMap& map);

/// Builds a segment from a full-frame mask: area, tight bbox and contour are
/// derived. Returns a segment with area 0 and an empty contour for an empty mask.
Segment segment_from_mask(std::int32_t id, const MaskRLE& mask);

/// Orders the boundary pixels of one region as a clockwise walk.
///
/// The walk starts at the topmost-leftmost boundary pixel, heading east, and
/// at each step takes the first unvisited boundary pixel found by sweeping the
/// 8-neighbourhood clockwise from the back-left of the current heading. When
/// the walk is stuck (hole boundaries, thin spurs), it resumes at the next
/// unvisited boundary pixel in row-major order. Every boundary pixel appears
/// exactly once. `inside(x, y)` must return false outside the frame.
template <class Inside>
std::vector<Point> trace_contour(const BoundingBox& box, Inside&& inside);

}  // namespace treatise::raster

#include "treatise/raster/segments_impl.hpp"
