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

// JSON bodies of the backend protocol (all endpoints under /v1):
//   POST /v1/segment  {image_b64}                 -> {segments: [{bbox: [x,y,w,h], mask: {counts}}]}
//   POST /v1/caption  {image_b64}                 -> {caption}
//   POST /v1/tag      {image_b64, vocabulary?}    -> {tags: [{text, confidence}]}
//   POST /v1/ground   {image_b64, tags}           -> {detections: [{text, confidence, bbox}]}
//   POST /v1/define   {prompt}                    -> {definition}
// Errors are non-200 responses carrying {error}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "treatise/catalog/record.hpp"
#include "treatise/common/error.hpp"

namespace treatise::pipeline {

enum class Stage { segment, caption, tag, ground, define };

const char* to_string(Stage stage);
Stage stage_from_string(const std::string& name);
inline constexpr Stage kAllStages[] = {Stage::segment, Stage::caption, Stage::tag, Stage::ground, Stage::define};

/// A response that does not match the protocol schema.
class WireError : public Error {
public:
    WireError(Stage stage, const std::string& what)
        : Error(ErrorKind::backend, std::string("/v1/") + to_string(stage) + ": malformed response: " + what) {}
};

struct WireSegment {
    catalog::BoundingBox bbox;
    std::vector<std::uint32_t> counts;
};

struct WireTag {
    std::string text;
    double confidence = 1.0;
};

struct Detection {
    std::string text;
    double confidence = 1.0;
    catalog::BoundingBox bbox;
};

namespace wire {

nlohmann::json image_request(std::span<const std::uint8_t> image);  // segment, caption
nlohmann::json tag_request(std::span<const std::uint8_t> image, const std::optional<std::vector<std::string>>& vocabulary);
nlohmann::json ground_request(std::span<const std::uint8_t> image, const std::vector<std::string>& tags);
nlohmann::json define_request(const std::string& prompt);

/// Canonical request bytes; the mock server keys its fixture table on their SHA-256.
std::string body(const nlohmann::json& request);

/// Parsers validate against the frame where relevant and throw WireError.
std::vector<WireSegment> parse_segment_response(const nlohmann::json& doc, int width, int height);
std::string parse_caption_response(const nlohmann::json& doc);
std::vector<WireTag> parse_tag_response(const nlohmann::json& doc);
std::vector<Detection> parse_ground_response(const nlohmann::json& doc, int width, int height);
std::string parse_define_response(const nlohmann::json& doc);

}  // namespace wire

}  // namespace treatise::pipeline
