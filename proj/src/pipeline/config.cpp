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
#include "treatise/pipeline/config.hpp"

#include <cstdlib>

namespace treatise::pipeline {

const char* to_string(SegmentationStage s) {
    return s == SegmentationStage::before_labeling ? "before_labeling" : "after_labeling";
}

SegmentationStage segmentation_stage_from_string(const std::string& name) {
    if (name == "before_labeling" || name == "before") return SegmentationStage::before_labeling;
    if (name == "after_labeling" || name == "after") return SegmentationStage::after_labeling;
    throw Error(ErrorKind::usage, "unknown segmentation stage '" + name + "'");
}

const char* to_string(Relief r) { return r == Relief::gradient ? "gradient" : "raw"; }

Relief relief_from_string(const std::string& name) {
    if (name == "gradient") return Relief::gradient;
    if (name == "raw") return Relief::raw;
    throw Error(ErrorKind::usage, "unknown relief '" + name + "'");
}

std::vector<Stage> PipelineConfig::required_stages() const {
    switch (method) {
        case Method::m1: return {Stage::caption, Stage::ground, Stage::segment};
        case Method::m2:
        case Method::m3:
        case Method::m4: return {Stage::tag, Stage::ground, Stage::segment};
        case Method::m4b: return {Stage::ground, Stage::segment};
        case Method::native: return {};
    }
    return {};
}

void PipelineConfig::validate() const {
    for (Stage s : required_stages()) {
        const auto it = endpoints.find(s);
        if (it == endpoints.end() || it->second.empty()) {
            throw Error(ErrorKind::usage, std::string("method ") + catalog::to_string(method) + " needs a " +
                                              to_string(s) + " endpoint (set " + env_var_for(s) + ")");
        }
    }
    for (const auto& [stage, url] : endpoints) {
        if (!url.empty() && !is_valid_url(url)) {
            throw Error(ErrorKind::usage, std::string(to_string(stage)) + " endpoint is not a valid URL: " + url);
        }
    }
    if ((method == Method::m4 || method == Method::m4b) && !vocabulary_path) {
        throw Error(ErrorKind::usage, std::string("method ") + catalog::to_string(method) + " needs vocabulary_path");
    }
    if (max_tags == 0) throw Error(ErrorKind::usage, "max_tags must be positive");
    if (hmin < 0) throw Error(ErrorKind::usage, "hmin must be non-negative");
}

const char* env_var_for(Stage stage) {
    switch (stage) {
        case Stage::segment: return "TREATISE_SEGMENT_URL";
        case Stage::caption: return "TREATISE_CAPTION_URL";
        case Stage::tag: return "TREATISE_TAG_URL";
        case Stage::ground: return "TREATISE_GROUND_URL";
        case Stage::define: return "TREATISE_DEFINE_URL";
    }
    return "";
}

void apply_env_overrides(PipelineConfig& config) {
    for (Stage s : kAllStages) {
        if (const char* v = std::getenv(env_var_for(s)); v != nullptr && *v != '\0') config.endpoints[s] = v;
    }
}

}  // namespace treatise::pipeline
