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

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "treatise/catalog/record.hpp"
#include "treatise/common/hash.hpp"
#include "treatise/raster/image.hpp"
#include "treatise/raster/rle.hpp"
#include "treatise/raster/segments.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline treatise::raster::ImageGrid grid(Rng& rng, int w, int h, int max_value = 255) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(w * h));
    for (auto& p : px) p = static_cast<std::uint8_t>(uniform(rng, 0, max_value));
    return {w, h, std::move(px)};
}

/// Between 1 and max_markers single-pixel markers labelled 1..K, distinct positions.
inline treatise::raster::MarkerMap markers(Rng& rng, int w, int h, int max_markers) {
    treatise::raster::MarkerMap m;
    m.width = w;
    m.height = h;
    m.labels.assign(static_cast<std::size_t>(w * h), 0);
    const int k = uniform(rng, 1, std::min(max_markers, w * h));
    std::vector<std::size_t> cells(m.labels.size());
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = i;
    std::shuffle(cells.begin(), cells.end(), rng);
    for (int i = 0; i < k; ++i) m.labels[cells[static_cast<std::size_t>(i)]] = i + 1;
    return m;
}

inline std::vector<std::uint8_t> bits(Rng& rng, int w, int h, double density) {
    std::vector<std::uint8_t> b(static_cast<std::size_t>(w * h));
    for (auto& v : b) v = coin(rng, density) ? 1 : 0;
    return b;
}

/// Filled rectangle with a few random holes; never empty.
inline treatise::raster::MaskRLE blob(Rng& rng, int w, int h) {
    const int bw = uniform(rng, 1, w), bh = uniform(rng, 1, h);
    const int x0 = uniform(rng, 0, w - bw), y0 = uniform(rng, 0, h - bh);
    std::vector<std::uint8_t> b(static_cast<std::size_t>(w * h), 0);
    for (int y = y0; y < y0 + bh; ++y) {
        for (int x = x0; x < x0 + bw; ++x) b[static_cast<std::size_t>(y * w + x)] = coin(rng, 0.85) ? 1 : 0;
    }
    b[static_cast<std::size_t>(y0 * w + x0)] = 1;
    return treatise::raster::rle_encode(b, w, h);
}

inline const std::vector<std::string>& words() {
    static const std::vector<std::string> w = {"keel",   "quilha", "sternpost", "codaste", "frame",   "rider frame",
                                               "scarf",  "heel",   "rabbet",    "pulley",  "anchor",  "ship",
                                               "timber", "deck",   "mast",      "rope",    "astrolabe", "hull"};
    return w;
}

inline std::string word(Rng& rng) { return words()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(words().size()) - 1))]; }

/// A record that passes validate_record.
inline treatise::catalog::ImageRecord record(Rng& rng) {
    using namespace treatise::catalog;
    ImageRecord r;
    r.width = uniform(rng, 1, 12);
    r.height = uniform(rng, 1, 12);
    r.image_id = treatise::sha256_hex("image-" + std::to_string(rng()));
    r.source_path = "pages/p" + std::to_string(uniform(rng, 0, 999)) + ".pgm";
    const int nseg = uniform(rng, 0, 4);
    for (int i = 1; i <= nseg; ++i) r.segments.push_back(treatise::raster::segment_from_mask(i, blob(rng, r.width, r.height)));
    for (const auto& s : r.segments) {
        if (!coin(rng, 0.7)) continue;
        auto& labels = r.assignments[s.id];
        const int nl = uniform(rng, 1, 3);
        for (int j = 0; j < nl; ++j) {
            LabelAssignment a;
            a.text = word(rng);
            a.confidence = uniform(rng, 0, 1000) / 1000.0;
            a.source = static_cast<LabelSource>(uniform(rng, 0, 4));
            if (coin(rng, 0.3)) a.concept_id = "Keel";
            if (coin(rng, 0.3)) a.definition = "the " + a.text + " is a part of a ship.";
            labels.push_back(std::move(a));
        }
    }
    if (coin(rng)) r.image_caption = "a drawing of a " + word(rng);
    r.provenance.method = static_cast<Method>(uniform(rng, 0, 5));
    if (coin(rng)) r.provenance.backend_ids["ground"] = "mock/" + std::to_string(uniform(rng, 0, 9));
    for (int i = uniform(rng, 0, 3); i > 0; --i) r.provenance.prompt_hashes.push_back(treatise::sha256_hex(std::to_string(rng())));
    r.provenance.timestamp = "2026-0" + std::to_string(uniform(rng, 1, 9)) + "-1" + std::to_string(uniform(rng, 0, 9)) + "T12:34:56Z";
    if (coin(rng)) r.provenance.stages = {"segment", "caption", "ground"};
    r.provenance.degraded = coin(rng, 0.2);
    if (coin(rng, 0.3)) r.extra["curator_note"] = "checked " + std::to_string(uniform(rng, 0, 99));
    return r;
}

/// Random DAG: each node may point only to lower-numbered nodes.
inline std::vector<std::vector<int>> dag(Rng& rng, int n, double edge_p) {
    std::vector<std::vector<int>> parents(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (coin(rng, edge_p)) parents[static_cast<std::size_t>(i)].push_back(j);
        }
    }
    return parents;
}

/// Dumps JSON with object keys in random order.
inline std::string shuffled_dump(const nlohmann::json& v, Rng& rng) {
    if (v.is_object()) {
        std::vector<std::string> keys;
        for (const auto& [k, x] : v.items()) keys.push_back(k);
        std::shuffle(keys.begin(), keys.end(), rng);
        std::string out = "{";
        for (std::size_t i = 0; i < keys.size(); ++i) {
            out += (i ? ", " : "") + nlohmann::json(keys[i]).dump() + ": " + shuffled_dump(v.at(keys[i]), rng);
        }
        return out + "}";
    }
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + shuffled_dump(v[i], rng);
        return out + "]";
    }
    return v.dump();
}

}  // namespace gen
