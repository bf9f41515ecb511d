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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treatise/raster/segments.hpp"

namespace treatise::catalog {

using raster::BoundingBox;
using raster::MaskRLE;
using raster::Point;
using raster::Segment;

inline constexpr int kSchemaVersion = 1;

enum class LabelSource { caption_derived, tagger, grounder, llm, human };

const char* to_string(LabelSource source);
/// Throws ParseError on an unknown name.
LabelSource label_source_from_string(const std::string& name);

struct LabelAssignment {
    std::string text;
    double confidence = 1.0;
    LabelSource source = LabelSource::human;
    std::optional<std::string> concept_id;
    std::optional<std::string> definition;

    friend bool operator==(const LabelAssignment&, const LabelAssignment&) = default;
};

enum class Method { m1, m2, m3, m4, m4b, native };

/// Canonical spelling used in sidecars: "M1".."M4", "M4b", "native".
const char* to_string(Method method);
/// Accepts the canonical spelling and the lowercase CLI form ("m4b").
Method method_from_string(const std::string& name);

struct Provenance {
    Method method = Method::native;
    std::map<std::string, std::string> backend_ids;  // stage -> backend identifier
    std::vector<std::string> prompt_hashes;          // SHA-256 hex of every prompt sent
    std::string timestamp;                           // UTC ISO-8601
    /// Stages in execution order; the only field that differs between segmentation orders.
    std::vector<std::string> stages;
    /// Set for methods known to produce unreliable labels (M4b).
    bool degraded = false;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ImageRecord {
    std::string image_id;  // SHA-256 hex of the image bytes
    std::string source_path;
    int width = 0;
    int height = 0;
    std::vector<Segment> segments;
    std::map<std::int32_t, std::vector<LabelAssignment>> assignments;
    std::optional<std::string> image_caption;
    Provenance provenance;
    /// Unknown top-level keys, kept verbatim and re-emitted on write.
    nlohmann::json extra = nlohmann::json::object();

    const Segment* find_segment(std::int32_t id) const;
    friend bool operator==(const ImageRecord&, const ImageRecord&) = default;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Copy with provenance reset to a default value; used to compare pipeline
/// outputs that differ only in how they were produced.
ImageRecord erase_provenance(ImageRecord record);

}  // namespace treatise::catalog
