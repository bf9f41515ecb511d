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
#include "treatise/pipeline/vocabulary.hpp"

#include <json.hpp>

#include "treatise/common/files.hpp"
#include "treatise/common/hash.hpp"
#include "treatise/common/json_schema.hpp"
#include "treatise/lexicon/normalize.hpp"
#include "treatise/pipeline/prompts.hpp"

namespace treatise::pipeline {

using nlohmann::json;
using namespace json_schema;

namespace {

json glossary_to_json(const lexicon::Glossary& glossary) {
    json entries = json::object();
    for (const auto& [id, e] : glossary.entries()) {
        entries[id] = {{"definitions", e.definitions}, {"variants", e.variants}, {"related", e.related_ids}};
    }
    return {{"entries", entries}};
}

// Headword prompts keyed by normalized term; the first headword wins a collision.
std::map<std::string, std::string> headword_prompts(const lexicon::Glossary& glossary, std::string_view domain_context) {
    std::map<std::string, std::string> prompts;
    for (const auto& [id, entry] : glossary.entries()) {
        prompts.emplace(lexicon::normalize_term(id), build_definition_prompt(id, domain_context));
    }
    return prompts;
}

}  // namespace

std::vector<std::string> VocabularySeed::terms() const {
    std::vector<std::string> out;
    for (const auto& [term, def] : entries) out.push_back(term);
    return out;
}

std::vector<std::string> VocabularySeed::prompt_hashes() const {
    std::vector<std::string> out;
    for (const auto& [term, prompt] : prompts) out.push_back(sha256_hex(prompt));
    return out;
}

std::string serialize_seed(const VocabularySeed& seed) {
    return json{{"language", seed.language},
                {"source_hash", seed.source_hash},
                {"entries", seed.entries},
                {"prompts", seed.prompts}}
        .dump();
}

VocabularySeed parse_seed(std::string_view text) {
    const json doc = json_schema::parse(text, "vocabulary seed");
    VocabularySeed seed;
    seed.language = as_string(member(doc, "language", ""), "/language");
    seed.source_hash = as_string(member(doc, "source_hash", ""), "/source_hash");
    for (const auto& [term, def] : as_object(member(doc, "entries", ""), "/entries").items()) {
        const std::string path = "/entries/" + term;
        if (lexicon::normalize_term(term) != term || term.empty()) throw SchemaError(path, "term is not normalized");
        std::string d = as_string(def, path);
        if (d.empty()) throw SchemaError(path, "empty definition");
        seed.entries[term] = std::move(d);
    }
    if (const json* prompts = optional_member(doc, "prompts")) {
        for (const auto& [term, prompt] : as_object(*prompts, "/prompts").items()) {
            seed.prompts[term] = as_string(prompt, "/prompts/" + term);
        }
    }
    return seed;
}

VocabularySeed load_seed(const std::filesystem::path& path) { return parse_seed(read_file_text(path)); }

void save_seed(const VocabularySeed& seed, const std::filesystem::path& path) {
    write_file_atomic(path, serialize_seed(seed));
}

std::string vocabulary_source_hash(const lexicon::Glossary& glossary, const std::string& language,
                                   std::string_view domain_context) {
    std::string material = glossary_to_json(glossary).dump();
    material += '\n';
    material += language;
    for (const auto& [term, prompt] : headword_prompts(glossary, domain_context)) {
        material += '\n';
        material += prompt;
    }
    return sha256_hex(material);
}

VocabularySeed build_label_vocabulary(const lexicon::Glossary& glossary, const BackendClient& definer,
                                      const std::string& language, const std::filesystem::path& cache_dir) {
    const std::string hash = vocabulary_source_hash(glossary, language, kDefaultDomainContext);
    const auto cache_file = cache_dir / ("vocab-" + hash + ".json");
    if (std::filesystem::exists(cache_file)) {
        VocabularySeed cached = load_seed(cache_file);
        if (cached.source_hash == hash) return cached;
    }

    VocabularySeed seed;
    seed.language = language;
    seed.source_hash = hash;
    seed.prompts = headword_prompts(glossary, kDefaultDomainContext);
    for (const auto& [term, prompt] : seed.prompts) {
        const auto reply = definer.post(wire::body(wire::define_request(prompt)));
        seed.entries[term] = wire::parse_define_response(reply.body);
    }
    std::filesystem::create_directories(cache_dir);
    save_seed(seed, cache_file);
    return seed;
}

}  // namespace treatise::pipeline
