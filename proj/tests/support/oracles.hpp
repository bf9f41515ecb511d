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

// Independent reference implementations used as test oracles. They favour
// directness over speed and share no code with the library under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "treatise/raster/image.hpp"

namespace oracle {

using treatise::raster::ImageGrid;

/// Largest m with (4m - 2)^2 <= s, capped at 255: floor(sqrt(s)/4 + 1/2) in integers.
inline int rounded_quarter_sqrt(std::int64_t s) {
    int m = 0;
    while (m < 255) {
        const std::int64_t t = 4 * (m + 1) - 2;
        if (t * t > s) break;
        ++m;
    }
    return m;
}

/// Direct 3x3 Sobel convolution with clamped coordinates.
inline std::vector<std::uint8_t> sobel(const ImageGrid& g) {
    const int w = g.width(), h = g.height();
    auto px = [&](int x, int y) {
        return static_cast<int>(g.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1)));
    };
    static const int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    std::vector<std::uint8_t> out;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::int64_t gx = 0, gy = 0;
            for (int j = -1; j <= 1; ++j) {
                for (int i = -1; i <= 1; ++i) {
                    gx += kx[j + 1][i + 1] * px(x + i, y + j);
                    gy += kx[i + 1][j + 1] * px(x + i, y + j);
                }
            }
            out.push_back(static_cast<std::uint8_t>(rounded_quarter_sqrt(gx * gx + gy * gy)));
        }
    }
    return out;
}

inline std::vector<std::size_t> neighbours4(std::size_t p, int w, int h) {
    const int x = static_cast<int>(p % static_cast<std::size_t>(w));
    const int y = static_cast<int>(p / static_cast<std::size_t>(w));
    std::vector<std::size_t> n;
    if (y > 0) n.push_back(p - static_cast<std::size_t>(w));
    if (x > 0) n.push_back(p - 1);
    if (x + 1 < w) n.push_back(p + 1);
    if (y + 1 < h) n.push_back(p + static_cast<std::size_t>(w));
    return n;
}

/// Immersion by full rescans: for each level, repeat waves until no unassigned
/// pixel at or below the level touches a region. Unreached pixels end as 0.
inline std::vector<std::int32_t> watershed(const ImageGrid& g, const std::vector<std::int32_t>& markers) {
    const int w = g.width(), h = g.height();
    const std::size_t n = g.size();
    std::vector<std::int32_t> lab(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (markers[i] > 0) lab[i] = markers[i];
    }
    for (int level = 0; level < 256; ++level) {
        for (;;) {
            std::vector<std::pair<std::size_t, std::int32_t>> wave;
            for (std::size_t p = 0; p < n; ++p) {
                if (lab[p] != -1 || g.pixels()[p] > level) continue;
                std::set<std::int32_t> seen;
                for (auto q : neighbours4(p, w, h)) {
                    if (lab[q] > 0) seen.insert(lab[q]);
                }
                if (seen.empty()) continue;
                wave.push_back({p, seen.size() == 1 ? *seen.begin() : 0});
            }
            if (wave.empty()) break;
            for (auto [p, l] : wave) lab[p] = l;
        }
    }
    for (auto& l : lab) l = std::max(l, 0);
    return lab;
}

/// h-minima transform by iterated geodesic erosion of f + h above f.
inline std::vector<int> hminima(const ImageGrid& g, int h) {
    const int w = g.width(), ht = g.height();
    const std::size_t n = g.size();
    std::vector<int> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = g.pixels()[i] + h;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < n; ++p) {
            int m = r[p];
            for (auto q : neighbours4(p, w, ht)) m = std::min(m, r[q]);
            m = std::max(m, static_cast<int>(g.pixels()[p]));
            if (m < r[p]) {
                r[p] = m;
                changed = true;
            }
        }
    }
    return r;
}

/// Regional minima of a relief: 4-connected equal-valued plateaus without a
/// strictly lower neighbour, labelled 1..K in row-major order of first pixel.
inline std::vector<std::int32_t> regional_minima(const std::vector<int>& relief, int w, int h) {
    const std::size_t n = relief.size();
    std::vector<std::int32_t> comp(n, -1);
    std::vector<std::vector<std::size_t>> plateaus;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const auto id = static_cast<std::int32_t>(plateaus.size());
        plateaus.emplace_back();
        std::deque<std::size_t> q{s};
        comp[s] = id;
        while (!q.empty()) {
            const auto p = q.front();
            q.pop_front();
            plateaus[static_cast<std::size_t>(id)].push_back(p);
            for (auto r : neighbours4(p, w, h)) {
                if (comp[r] == -1 && relief[r] == relief[s]) {
                    comp[r] = id;
                    q.push_back(r);
                }
            }
        }
    }
    std::vector<std::int32_t> out(n, 0);
    std::int32_t next = 1;
    for (const auto& pl : plateaus) {
        bool minimal = true;
        for (auto p : pl) {
            for (auto r : neighbours4(p, w, h)) minimal = minimal && relief[r] >= relief[p];
        }
        if (!minimal) continue;
        for (auto p : pl) out[p] = next;
        ++next;
    }
    return out;
}

/// Set pixels with an unset or out-of-frame 4-neighbour.
inline std::set<std::pair<int, int>> boundary(const std::vector<std::uint8_t>& bits, int w, int h) {
    std::set<std::pair<int, int>> out;
    auto set = [&](int x, int y) { return x >= 0 && y >= 0 && x < w && y < h && bits[static_cast<std::size_t>(y * w + x)]; };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (set(x, y) && (!set(x - 1, y) || !set(x + 1, y) || !set(x, y - 1) || !set(x, y + 1))) out.insert({x, y});
        }
    }
    return out;
}

/// Transitive closure by repeated squaring-free reachability (Floyd-Warshall).
inline std::vector<std::vector<bool>> reachability(const std::vector<std::vector<int>>& parents) {
    const std::size_t n = parents.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (int p : parents[i]) r[i][static_cast<std::size_t>(p)] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!r[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (r[k][j]) r[i][j] = true;
            }
        }
    }
    return r;
}

/// BM25 straight from the formula.
inline double bm25(const std::vector<std::map<std::string, int>>& docs, std::size_t d,
                   const std::set<std::string>& query, double k1 = 1.2, double b = 0.75) {
    const double big_n = static_cast<double>(docs.size());
    double total = 0;
    for (const auto& doc : docs) {
        for (const auto& [t, f] : doc) total += f;
    }
    const double avgdl = total / big_n;
    double dl = 0;
    for (const auto& [t, f] : docs[d]) dl += f;
    double score = 0;
    for (const auto& t : query) {
        double n = 0;
        for (const auto& doc : docs) n += doc.count(t) ? 1 : 0;
        const auto it = docs[d].find(t);
        if (it == docs[d].end()) continue;
        const double tf = it->second;
        const double idf = std::log((big_n - n + 0.5) / (n + 0.5) + 1.0);
        score += idf * tf * (k1 + 1) / (tf + k1 * (1 - b + b * dl / avgdl));
    }
    return score;
}

struct Box {
    int x, y, w, h;
};

inline double iou(const Box& a, const Box& b) {
    const int ix = std::max(0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
    const int iy = std::max(0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
    const double inter = static_cast<double>(ix) * iy;
    const double uni = static_cast<double>(a.w) * a.h + static_cast<double>(b.w) * b.h - inter;
    return uni > 0 ? inter / uni : 0.0;
}

/// Best one-to-one assignment over all injections: maximal match count, then maximal IoU sum.
inline std::pair<std::size_t, double> exhaustive_matching(const std::vector<Box>& pred, const std::vector<Box>& truth,
                                                          double threshold) {
    std::pair<std::size_t, double> best{0, 0.0};
    std::vector<bool> used(truth.size(), false);
    std::function<void(std::size_t, std::size_t, double)> rec = [&](std::size_t i, std::size_t count, double sum) {
        if (i == pred.size()) {
            if (count > best.first || (count == best.first && sum > best.second + 1e-12)) best = {count, sum};
            return;
        }
        rec(i + 1, count, sum);
        for (std::size_t t = 0; t < truth.size(); ++t) {
            if (used[t]) continue;
            const double v = iou(pred[i], truth[t]);
            if (v < threshold) continue;
            used[t] = true;
            rec(i + 1, count + 1, sum + v);
            used[t] = false;
        }
    };
    rec(0, 0, 0.0);
    return best;
}

}  // namespace oracle
