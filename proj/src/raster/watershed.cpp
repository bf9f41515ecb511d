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
#include "treatise/raster/watershed.hpp"

#include <array>
#include <vector>

#include "treatise/common/error.hpp"

namespace treatise::raster {

namespace {

constexpr std::int32_t kUnassigned = -1;
constexpr std::int32_t kLine = 0;

}  // namespace

SegmentMap watershed(const ImageGrid& grid, const MarkerMap& markers) {
    if (markers.width != grid.width() || markers.height != grid.height() ||
        markers.labels.size() != grid.size()) {
        throw SchemaError("/markers", "marker map dimensions do not match the image");
    }
    const int w = grid.width();
    const int h = grid.height();
    const std::size_t n = grid.size();
    const auto pixels = grid.pixels();

    std::vector<std::int32_t> label(n, kUnassigned);
    std::vector<bool> queued(n, false);
    bool any_marker = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (markers.labels[i] < 0) throw SchemaError("/markers", "negative marker label");
        if (markers.labels[i] > 0) {
            label[i] = markers.labels[i];
            queued[i] = true;
            any_marker = true;
        }
    }
    if (!any_marker) throw SchemaError("/markers", "marker map has no labels");

    auto for_neighbors = [w, h](std::size_t p, auto&& fn) {
        const int x = static_cast<int>(p % static_cast<std::size_t>(w));
        const int y = static_cast<int>(p / static_cast<std::size_t>(w));
        if (y > 0) fn(p - static_cast<std::size_t>(w));
        if (x > 0) fn(p - 1);
        if (x + 1 < w) fn(p + 1);
        if (y + 1 < h) fn(p + static_cast<std::size_t>(w));
    };

    // Hierarchical queue: bucket[v] holds pixels of intensity v adjacent to a region.
    std::array<std::vector<std::size_t>, 256> buckets;
    auto enqueue_neighbors = [&](std::size_t p, int level, std::vector<std::size_t>& next) {
        for_neighbors(p, [&](std::size_t q) {
            if (queued[q]) return;
            queued[q] = true;
            if (pixels[q] <= level) {
                next.push_back(q);
            } else {
                buckets[pixels[q]].push_back(q);
            }
        });
    };

    std::vector<std::size_t> frontier;
    std::vector<std::size_t> next;
    std::vector<std::int32_t> decision;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] > 0) enqueue_neighbors(i, -1, next);
    }

    for (int level = 0; level < 256; ++level) {
        frontier.swap(buckets[static_cast<std::size_t>(level)]);
        while (!frontier.empty()) {
            decision.assign(frontier.size(), kUnassigned);
            for (std::size_t k = 0; k < frontier.size(); ++k) {
                std::int32_t seen = kUnassigned;
                bool conflict = false;
                for_neighbors(frontier[k], [&](std::size_t q) {
                    const std::int32_t l = label[q];
                    if (l <= 0) return;
                    if (seen == kUnassigned) {
                        seen = l;
                    } else if (seen != l) {
                        conflict = true;
                    }
                });
                decision[k] = conflict ? kLine : seen;
            }
            for (std::size_t k = 0; k < frontier.size(); ++k) label[frontier[k]] = decision[k];

            next.clear();
            for (std::size_t k = 0; k < frontier.size(); ++k) {
                if (decision[k] > 0) enqueue_neighbors(frontier[k], level, next);
            }
            frontier.swap(next);
        }
        buckets[static_cast<std::size_t>(level)].clear();
    }

    SegmentMap out;
    out.width = w;
    out.height = h;
    out.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.labels[i] = label[i] == kUnassigned ? kLine : label[i];
    return out;
}

}  // namespace treatise::raster
