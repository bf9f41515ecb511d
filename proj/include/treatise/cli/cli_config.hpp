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

#include <filesystem>
#include <optional>
#include <string_view>

#include "treatise/pipeline/config.hpp"
#include "treatise/pipeline/run.hpp"

namespace treatise::cli {

struct CliConfig {
    std::optional<std::filesystem::path> glossary;
    std::optional<std::filesystem::path> ontology;
    std::optional<std::filesystem::path> manifest;
    std::optional<std::filesystem::path> index;
    /// A stopword file, or a directory of stopwords_<lang>.txt files.
    std::optional<std::filesystem::path> stopwords;
    std::optional<std::filesystem::path> fixtures;  // mock-serve fixture table
    pipeline::PipelineConfig pipeline;
};

/// Parses treatise.json. Relative paths resolve against base_dir. Input files
/// (glossary, ontology, manifest, stopwords, term list, fixtures) must exist;
/// the index and vocabulary may be produced later. Env overrides apply last.
CliConfig parse_cli_config(std::string_view text, const std::filesystem::path& base_dir);
CliConfig load_cli_config(const std::filesystem::path& path);

/// Empty glossary, ontology or stopwords when the path is unset.
pipeline::Knowledge load_knowledge(const CliConfig& config);

}  // namespace treatise::cli
