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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "treatise/catalog/record.hpp"
#include "treatise/lexicon/glossary.hpp"
#include "treatise/lexicon/stopwords.hpp"
#include "treatise/ontology/ontology.hpp"
#include "treatise/pipeline/config.hpp"
#include "treatise/pipeline/vocabulary.hpp"

namespace treatise::pipeline {

struct Knowledge {
    lexicon::Glossary glossary;
    ontology::Ontology ontology;
    lexicon::Stopwords stopwords;
};

/// Plaintext vocabulary: one term per line, '#' starts a comment. Terms are
/// normalized and deduplicated in file order.
std::vector<std::string> parse_term_list(std::string_view text);
std::vector<std::string> load_term_list(const std::filesystem::path& path);

/// Loads the seed at config.vocabulary_path, or builds it with the define
/// endpoint (cached beside it) and saves it there.
VocabularySeed ensure_vocabulary(const PipelineConfig& config, const lexicon::Glossary& glossary);

/// Native path: PGM decode, relief, h-minima markers, watershed.
catalog::ImageRecord segment_native(std::span<const std::uint8_t> image_bytes, const std::string& source_path,
                                    Relief relief = Relief::gradient, int hmin = 2);

/// Runs the configured method and returns a validated record. Each detection is
/// attached to the segment with the largest box IoU (lowest id on ties), or to
/// a new box-shaped segment when no segment overlaps it. Throws BackendError,
/// WireError or SchemaError; nothing is written.
catalog::ImageRecord run_pipeline(std::span<const std::uint8_t> image_bytes, const std::string& source_path,
                                  const PipelineConfig& config, const Knowledge& knowledge);

}  // namespace treatise::pipeline
