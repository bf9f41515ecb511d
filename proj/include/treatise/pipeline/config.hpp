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

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "treatise/catalog/record.hpp"
#include "treatise/pipeline/client.hpp"
#include "treatise/pipeline/wire.hpp"

namespace treatise::pipeline {

using catalog::Method;

enum class SegmentationStage { before_labeling, after_labeling };
enum class Relief { gradient, raw };

const char* to_string(SegmentationStage s);
SegmentationStage segmentation_stage_from_string(const std::string& name);
const char* to_string(Relief r);
Relief relief_from_string(const std::string& name);

struct PipelineConfig {
    Method method = Method::native;
    std::map<Stage, std::string> endpoints;  // base URLs
    SegmentationStage segmentation_stage = SegmentationStage::before_labeling;
    std::optional<std::filesystem::path> vocabulary_path;  // VocabularySeed JSON (M4, M4b)
    std::optional<std::filesystem::path> term_list_path;   // plaintext vocabulary (M2, M3)
    std::size_t max_tags = 32;
    RetryPolicy retry;
    std::string language = "en";

    // Native watershed path.
    Relief relief = Relief::gradient;
    int hmin = 2;

    /// Overrides the provenance clock; used for reproducible output.
    std::optional<std::string> fixed_timestamp;

    /// Endpoints the method calls (define is needed only to build a missing vocabulary).
    std::vector<Stage> required_stages() const;
    /// Throws Error(usage) naming the first problem.
    void validate() const;
};

/// TREATISE_SEGMENT_URL, TREATISE_CAPTION_URL, TREATISE_TAG_URL,
/// TREATISE_GROUND_URL and TREATISE_DEFINE_URL replace configured endpoints.
void apply_env_overrides(PipelineConfig& config);

const char* env_var_for(Stage stage);

}  // namespace treatise::pipeline
