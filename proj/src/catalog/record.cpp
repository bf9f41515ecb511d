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
#include "treatise/catalog/record.hpp"

#include <chrono>
#include <ctime>

#include "treatise/common/error.hpp"

namespace treatise::catalog {

const char* to_string(LabelSource source) {
    switch (source) {
        case LabelSource::caption_derived: return "caption-derived";
        case LabelSource::tagger: return "tagger";
        case LabelSource::grounder: return "grounder";
        case LabelSource::llm: return "llm";
        case LabelSource::human: return "human";
    }
    return "?";
}

LabelSource label_source_from_string(const std::string& name) {
    if (name == "caption-derived") return LabelSource::caption_derived;
    if (name == "tagger") return LabelSource::tagger;
    if (name == "grounder") return LabelSource::grounder;
    if (name == "llm") return LabelSource::llm;
    if (name == "human") return LabelSource::human;
    throw ParseError("unknown label source '" + name + "'");
}

const char* to_string(Method method) {
    switch (method) {
        case Method::m1: return "M1";
        case Method::m2: return "M2";
        case Method::m3: return "M3";
        case Method::m4: return "M4";
        case Method::m4b: return "M4b";
        case Method::native: return "native";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    if (name == "M1" || name == "m1") return Method::m1;
    if (name == "M2" || name == "m2") return Method::m2;
    if (name == "M3" || name == "m3") return Method::m3;
    if (name == "M4" || name == "m4") return Method::m4;
    if (name == "M4b" || name == "m4b") return Method::m4b;
    if (name == "native") return Method::native;
    throw ParseError("unknown method '" + name + "'");
}

const Segment* ImageRecord::find_segment(std::int32_t id) const {
    for (const auto& s : segments) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ImageRecord erase_provenance(ImageRecord record) {
    record.provenance = Provenance{};
    return record;
}

}  // namespace treatise::catalog
