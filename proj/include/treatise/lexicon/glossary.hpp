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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treatise/lexicon/stopwords.hpp"

namespace treatise::lexicon {

struct GlossEntry {
    std::string id;  // canonical English headword, lowercase
    std::map<std::string, std::string> definitions;            // language -> text
    std::map<std::string, std::vector<std::string>> variants;  // language -> terms
    std::vector<std::string> related_ids;
};

/// Multilingual glossary; immutable once loaded.
class Glossary {
public:
    Glossary() = default;

    const std::map<std::string, GlossEntry>& entries() const { return entries_; }
    const std::map<std::string, std::set<std::string>>& variant_index() const { return variant_index_; }
    const GlossEntry* find(const std::string& id) const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Ids of entries with a variant (any language) that normalizes like `term`.
    std::set<std::string> lookup(std::string_view term) const;

    /// Validates and indexes; throws SchemaError on duplicate ids, empty
    /// variants or dangling related ids. The headword is added as an English
    /// variant when absent.
    static Glossary build(std::vector<GlossEntry> entries);

private:
    std::map<std::string, GlossEntry> entries_;
    std::map<std::string, std::set<std::string>> variant_index_;
};

/// Parses {"entries": {"<id>": {"definitions": {...}, "variants": {...}, "related": [...]}}}.
/// Throws ParseError on bad JSON and SchemaError on a duplicate id or a
/// dangling related id.
Glossary parse_glossary(std::string_view text);
Glossary load_glossary(const std::filesystem::path& path);

/// Content tokens of the entry's definition in `language`: tokenized on
/// non-letters, normalized, stopwords removed, first occurrence kept.
/// Throws SchemaError if the entry has no definition in that language.
std::vector<std::string> definition_terms(const GlossEntry& entry, const std::string& language,
                                          const Stopwords& stopwords);

/// Normalized inputs, plus every normalized variant of each entry they hit,
/// plus (for related_hops > 0) the variants of entries reachable through
/// `related` links within that many hops. Always a superset of the
/// normalized inputs; monotone in the input set.
std::set<std::string> expand_terms(const Glossary& glossary, const std::set<std::string>& terms,
                                   int related_hops = 0);

}  // namespace treatise::lexicon
