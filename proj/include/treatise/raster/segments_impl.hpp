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

// Template definitions for segments.hpp.

#include <vector>

namespace treatise::raster {

template <class Inside>
std::vector<Point> trace_contour(const BoundingBox& box, Inside&& inside) {
    // Clockwise on screen (y grows downwards): E, SE, S, SW, W, NW, N, NE.
    static constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    static constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

    const auto local = [&](int x, int y) {
        return static_cast<std::size_t>(y - box.y) * static_cast<std::size_t>(box.w) +
               static_cast<std::size_t>(x - box.x);
    };
    // 0 = not boundary, 1 = boundary pending, 2 = visited
    std::vector<std::uint8_t> state(static_cast<std::size_t>(box.w) * static_cast<std::size_t>(box.h), 0);
    std::size_t pending = 0;
    for (int y = box.y; y < box.y + box.h; ++y) {
        for (int x = box.x; x < box.x + box.w; ++x) {
            if (!inside(x, y)) continue;
            if (!inside(x, y - 1) || !inside(x - 1, y) || !inside(x + 1, y) || !inside(x, y + 1)) {
                state[local(x, y)] = 1;
                ++pending;
            }
        }
    }

    std::vector<Point> contour;
    contour.reserve(pending);
    std::size_t scan = 0;
    while (pending > 0) {
        while (state[scan] != 1) ++scan;
        int x = box.x + static_cast<int>(scan % static_cast<std::size_t>(box.w));
        int y = box.y + static_cast<int>(scan / static_cast<std::size_t>(box.w));
        int heading = 0;
        for (;;) {
            state[local(x, y)] = 2;
            --pending;
            contour.push_back({x, y});
            bool moved = false;
            for (int k = 0; k < 8; ++k) {
                const int d = (heading + 5 + k) % 8;
                const int nx = x + kDx[d];
                const int ny = y + kDy[d];
                if (!box.contains(nx, ny)) continue;
                if (state[local(nx, ny)] == 1) {
                    x = nx;
                    y = ny;
                    heading = d;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
    }
    return contour;
}

}  // namespace treatise::raster
