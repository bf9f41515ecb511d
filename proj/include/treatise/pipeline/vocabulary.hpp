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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "treatise/lexicon/glossary.hpp"
#include "treatise/pipeline/client.hpp"

namespace treatise::pipeline {

/// Term -> definition map that restricts open-set tagging (M4) and supplies
/// long-form tags (M4b).
struct VocabularySeed {
    std::string language = "en";
    std::string source_hash;  // SHA-256 over the glossary, language and prompts
    std::map<std::string, std::string> entries;  // normalized term -> definition
    std::map<std::string, std::string> prompts;  // normalized term -> definition prompt

    std::vector<std::string> terms() const;
    /// SHA-256 of every definition prompt, in term order.
    std::vector<std::string> prompt_hashes() const;
    friend bool operator==(const VocabularySeed&, const VocabularySeed&) = default;
};

std::string serialize_seed(const VocabularySeed& seed);
VocabularySeed parse_seed(std::string_view text);
VocabularySeed load_seed(const std::filesystem::path& path);
void save_seed(const VocabularySeed& seed, const std::filesystem::path& path);

/// Hash identifying the seed a glossary would produce.
std::string vocabulary_source_hash(const lexicon::Glossary& glossary, const std::string& language,
                                   std::string_view domain_context);

/// Requests one definition per glossary entry (prompted on its headword) and
/// caches the complete seed as "<cache_dir>/vocab-<source hash>.json". A
/// cached seed is returned without contacting the definer. Nothing is cached
/// when any request fails.
VocabularySeed build_label_vocabulary(const lexicon::Glossary& glossary, const BackendClient& definer,
                                      const std::string& language, const std::filesystem::path& cache_dir);

}  // namespace treatise::pipeline
