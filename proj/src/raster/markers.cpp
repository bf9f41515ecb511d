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
#include "treatise/raster/markers.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace treatise::raster {

namespace {

constexpr int kDx[4] = {0, -1, 1, 0};
constexpr int kDy[4] = {-1, 0, 0, 1};

// Reconstruction by erosion of (f + h) over f, as a minimax priority flood:
// R(p) = min over paths q..p of max(f(q) + h, max f along the rest of the path).
std::vector<int> hminima_relief(const ImageGrid& f, int h) {
    const int w = f.width();
    const int ht = f.height();
    const std::size_t n = f.size();
    const int top = 255 + h;
    std::vector<int> relief(n);
    std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(top) + 1);
    for (std::size_t i = 0; i < n; ++i) {
        relief[i] = f.pixels()[i] + h;
        buckets[static_cast<std::size_t>(relief[i])].push_back(i);
    }
    for (int level = 0; level <= top; ++level) {
        auto& bucket = buckets[static_cast<std::size_t>(level)];
        // Buckets at the current level can grow while being drained.
        for (std::size_t k = 0; k < bucket.size(); ++k) {
            const std::size_t p = bucket[k];
            if (relief[p] != level) continue;
            const int px = static_cast<int>(p % static_cast<std::size_t>(w));
            const int py = static_cast<int>(p / static_cast<std::size_t>(w));
            for (int d = 0; d < 4; ++d) {
                const int qx = px + kDx[d];
                const int qy = py + kDy[d];
                if (qx < 0 || qy < 0 || qx >= w || qy >= ht) continue;
                const std::size_t q = f.index(qx, qy);
                const int cand = std::max(level, static_cast<int>(f.pixels()[q]));
                if (cand < relief[q]) {
                    relief[q] = cand;
                    buckets[static_cast<std::size_t>(cand)].push_back(q);
                }
            }
        }
        bucket.clear();
        bucket.shrink_to_fit();
    }
    return relief;
}

}  // namespace

MarkerMap regional_minima_markers(const ImageGrid& grid, int h) {
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    h = std::min(h, 255);
    const int w = grid.width();
    const int ht = grid.height();
    const std::size_t n = grid.size();

    std::vector<int> relief;
    if (h == 0) {
        relief.assign(grid.pixels().begin(), grid.pixels().end());
    } else {
        relief = hminima_relief(grid, h);
    }

    MarkerMap markers;
    markers.width = w;
    markers.height = ht;
    markers.labels.assign(n, 0);

    std::vector<bool> visited(n, false);
    std::vector<std::size_t> plateau;
    std::int32_t next_label = 1;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        const int value = relief[start];
        plateau.clear();
        plateau.push_back(start);
        visited[start] = true;
        bool minimal = true;
        for (std::size_t k = 0; k < plateau.size(); ++k) {
            const std::size_t p = plateau[k];
            const int px = static_cast<int>(p % static_cast<std::size_t>(w));
            const int py = static_cast<int>(p / static_cast<std::size_t>(w));
            for (int d = 0; d < 4; ++d) {
                const int qx = px + kDx[d];
                const int qy = py + kDy[d];
                if (qx < 0 || qy < 0 || qx >= w || qy >= ht) continue;
                const std::size_t q = grid.index(qx, qy);
                if (relief[q] < value) {
                    minimal = false;
                } else if (relief[q] == value && !visited[q]) {
                    visited[q] = true;
                    plateau.push_back(q);
                }
            }
        }
        if (minimal) {
            for (auto p : plateau) markers.labels[p] = next_label;
            ++next_label;
        }
    }
    return markers;
}

}  // namespace treatise::raster
