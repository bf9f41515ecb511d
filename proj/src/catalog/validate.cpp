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
#include "treatise/catalog/validate.hpp"

#include <cmath>
#include <numeric>
#include <regex>
#include <set>

#include "treatise/common/hash.hpp"
#include "treatise/lexicon/normalize.hpp"

namespace treatise::catalog {

namespace {

std::string describe(const std::vector<Violation>& violations) {
    std::string out = "record failed validation:";
    for (const auto& v : violations) out += " " + v.path + " (" + v.message + ");";
    return out;
}

void check_segment(const ImageRecord& r, const Segment& s, const std::string& path, std::vector<Violation>& out) {
    if (s.id < 1) out.push_back({path + "/id", "segment id must be >= 1"});

    const std::uint64_t frame = static_cast<std::uint64_t>(std::max(r.width, 0)) * static_cast<std::uint64_t>(std::max(r.height, 0));
    const std::uint64_t sum = std::accumulate(s.mask.counts.begin(), s.mask.counts.end(), std::uint64_t{0});
    const bool mask_ok = s.mask.width == r.width && s.mask.height == r.height && sum == frame && frame > 0;
    if (!mask_ok) {
        out.push_back({path + "/mask", "run lengths do not cover the image frame"});
    }

    if (!s.bbox.fits(r.width, r.height)) {
        out.push_back({path + "/bbox", "box does not lie inside the image frame"});
    }
    if (!mask_ok) return;

    // Decode once; the remaining checks compare against the mask.
    const auto bits = raster::rle_decode(s.mask);
    const int w = r.width;
    const int h = r.height;
    auto set = [&](int x, int y) {
        return x >= 0 && y >= 0 && x < w && y < h &&
               bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)] != 0;
    };
    std::uint64_t area = 0;
    int x0 = w, y0 = h, x1 = -1, y1 = -1;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!set(x, y)) continue;
            ++area;
            x0 = std::min(x0, x);
            y0 = std::min(y0, y);
            x1 = std::max(x1, x);
            y1 = std::max(y1, y);
        }
    }
    if (area == 0) out.push_back({path + "/mask", "mask is empty"});
    if (s.area != area) out.push_back({path + "/area", "area does not match the mask pixel count"});
    if (area > 0 && s.bbox.fits(w, h)) {
        const BoundingBox tight{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
        if (!(tight == s.bbox)) out.push_back({path + "/bbox", "box is not the tight box of the mask"});
    }

    std::set<Point> seen;
    for (std::size_t i = 0; i < s.contour.size(); ++i) {
        const auto& p = s.contour[i];
        const std::string ppath = path + "/contour/" + std::to_string(i);
        if (!set(p.x, p.y)) {
            out.push_back({ppath, "contour pixel is not a mask pixel"});
            continue;
        }
        if (set(p.x, p.y - 1) && set(p.x - 1, p.y) && set(p.x + 1, p.y) && set(p.x, p.y + 1)) {
            out.push_back({ppath, "contour pixel is interior"});
        }
        if (!seen.insert(p).second) out.push_back({ppath, "duplicate contour pixel"});
    }
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : SchemaError(violations.empty() ? "/" : violations.front().path, describe(violations)),
      violations_(std::move(violations)) {}

bool is_utc_timestamp(const std::string& text) {
    static const std::regex pattern(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}(\.\d+)?Z)");
    return std::regex_match(text, pattern);
}

std::vector<Violation> validate_record(const ImageRecord& r) {
    std::vector<Violation> out;
    if (!is_sha256_hex(r.image_id)) out.push_back({"/image_id", "not a lowercase SHA-256 hex digest"});
    if (r.width < 1) out.push_back({"/width", "must be >= 1"});
    if (r.height < 1) out.push_back({"/height", "must be >= 1"});

    std::set<std::int32_t> ids;
    for (std::size_t i = 0; i < r.segments.size(); ++i) {
        const std::string path = "/segments/" + std::to_string(i);
        check_segment(r, r.segments[i], path, out);
        if (!ids.insert(r.segments[i].id).second) out.push_back({path + "/id", "duplicate segment id"});
    }

    for (const auto& [id, labels] : r.assignments) {
        const std::string path = "/assignments/" + std::to_string(id);
        if (!ids.contains(id)) {
            out.push_back({path, "assignment references absent segment " + std::to_string(id)});
        }
        for (std::size_t j = 0; j < labels.size(); ++j) {
            const auto& a = labels[j];
            const std::string apath = path + "/" + std::to_string(j);
            if (lexicon::normalize_term(a.text).empty()) out.push_back({apath + "/text", "label text is empty"});
            if (!(a.confidence >= 0.0 && a.confidence <= 1.0)) {
                out.push_back({apath + "/confidence", "confidence outside [0, 1]"});
            }
            if (a.concept_id && a.concept_id->empty()) out.push_back({apath + "/concept_id", "empty concept id"});
        }
    }

    const auto& p = r.provenance;
    if (!is_utc_timestamp(p.timestamp)) out.push_back({"/provenance/timestamp", "not a UTC ISO-8601 timestamp"});
    for (std::size_t k = 0; k < p.prompt_hashes.size(); ++k) {
        if (!is_sha256_hex(p.prompt_hashes[k])) {
            out.push_back({"/provenance/prompt_hashes/" + std::to_string(k), "not a SHA-256 hex digest"});
        }
    }
    if (!r.extra.is_object()) out.push_back({"/", "foreign keys must form an object"});
    return out;
}

bool verify_image_id(const ImageRecord& record, std::span<const std::uint8_t> image_bytes) {
    return record.image_id == sha256_hex(image_bytes);
}

void ensure_valid(const ImageRecord& record) {
    auto violations = validate_record(record);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace treatise::catalog
