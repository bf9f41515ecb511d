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
#include "treatise/pipeline/wire.hpp"

#include <cmath>
#include <numeric>

#include "treatise/common/hash.hpp"

namespace treatise::pipeline {

using nlohmann::json;

const char* to_string(Stage stage) {
    switch (stage) {
        case Stage::segment: return "segment";
        case Stage::caption: return "caption";
        case Stage::tag: return "tag";
        case Stage::ground: return "ground";
        case Stage::define: return "define";
    }
    return "?";
}

Stage stage_from_string(const std::string& name) {
    for (Stage s : kAllStages) {
        if (name == to_string(s)) return s;
    }
    throw ParseError("unknown backend stage '" + name + "'");
}

namespace wire {

namespace {

const json& field(const json& doc, const char* key, Stage stage) {
    if (!doc.is_object()) throw WireError(stage, "body is not an object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw WireError(stage, std::string("missing '") + key + "'");
    return *it;
}

std::string string_field(const json& doc, const char* key, Stage stage) {
    const json& v = field(doc, key, stage);
    if (!v.is_string()) throw WireError(stage, std::string("'") + key + "' is not a string");
    return v.get<std::string>();
}

double confidence_field(const json& doc, Stage stage) {
    const auto it = doc.find("confidence");
    // Backends that report no confidence get 1.0.
    if (it == doc.end() || it->is_null()) return 1.0;
    if (!it->is_number()) throw WireError(stage, "'confidence' is not a number");
    const double c = it->get<double>();
    if (!(c >= 0.0 && c <= 1.0)) throw WireError(stage, "'confidence' outside [0, 1]");
    return c;
}

catalog::BoundingBox box_field(const json& doc, Stage stage, int width, int height) {
    const json& v = field(doc, "bbox", stage);
    if (!v.is_array() || v.size() != 4) throw WireError(stage, "'bbox' is not [x, y, w, h]");
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw WireError(stage, "'bbox' holds a non-integer");
    }
    const catalog::BoundingBox b{v[0].get<int>(), v[1].get<int>(), v[2].get<int>(), v[3].get<int>()};
    if (!b.fits(width, height)) throw WireError(stage, "'bbox' lies outside the image frame");
    return b;
}

}  // namespace

json image_request(std::span<const std::uint8_t> image) { return {{"image_b64", base64_encode(image)}}; }

json tag_request(std::span<const std::uint8_t> image, const std::optional<std::vector<std::string>>& vocabulary) {
    json req = image_request(image);
    if (vocabulary) req["vocabulary"] = *vocabulary;
    return req;
}

json ground_request(std::span<const std::uint8_t> image, const std::vector<std::string>& tags) {
    json req = image_request(image);
    req["tags"] = tags;
    return req;
}

json define_request(const std::string& prompt) { return {{"prompt", prompt}}; }

std::string body(const json& request) { return request.dump(); }

std::vector<WireSegment> parse_segment_response(const json& doc, int width, int height) {
    const json& list = field(doc, "segments", Stage::segment);
    if (!list.is_array()) throw WireError(Stage::segment, "'segments' is not an array");
    const std::uint64_t frame = static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    std::vector<WireSegment> out;
    for (const auto& item : list) {
        WireSegment s;
        s.bbox = box_field(item, Stage::segment, width, height);
        const json& counts = field(field(item, "mask", Stage::segment), "counts", Stage::segment);
        if (!counts.is_array()) throw WireError(Stage::segment, "'mask.counts' is not an array");
        std::uint64_t sum = 0;
        for (const auto& c : counts) {
            if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<long long>() >= 0)) {
                throw WireError(Stage::segment, "'mask.counts' holds a negative or non-integer run");
            }
            s.counts.push_back(c.get<std::uint32_t>());
            sum += s.counts.back();
        }
        if (sum != frame) throw WireError(Stage::segment, "mask runs do not cover the image frame");
        out.push_back(std::move(s));
    }
    return out;
}

std::string parse_caption_response(const json& doc) { return string_field(doc, "caption", Stage::caption); }

std::vector<WireTag> parse_tag_response(const json& doc) {
    const json& list = field(doc, "tags", Stage::tag);
    if (!list.is_array()) throw WireError(Stage::tag, "'tags' is not an array");
    std::vector<WireTag> out;
    for (const auto& item : list) {
        out.push_back({string_field(item, "text", Stage::tag), confidence_field(item, Stage::tag)});
    }
    return out;
}

std::vector<Detection> parse_ground_response(const json& doc, int width, int height) {
    const json& list = field(doc, "detections", Stage::ground);
    if (!list.is_array()) throw WireError(Stage::ground, "'detections' is not an array");
    std::vector<Detection> out;
    for (const auto& item : list) {
        out.push_back({string_field(item, "text", Stage::ground), confidence_field(item, Stage::ground),
                       box_field(item, Stage::ground, width, height)});
    }
    return out;
}

std::string parse_define_response(const json& doc) {
    std::string d = string_field(doc, "definition", Stage::define);
    if (d.empty()) throw WireError(Stage::define, "empty definition");
    return d;
}

}  // namespace wire

}  // namespace treatise::pipeline
