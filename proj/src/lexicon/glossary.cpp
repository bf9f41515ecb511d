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
#include "treatise/lexicon/glossary.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "treatise/common/error.hpp"
#include "treatise/common/files.hpp"
#include "treatise/common/json_schema.hpp"
#include "treatise/lexicon/normalize.hpp"

namespace treatise::lexicon {

using nlohmann::json;
using namespace json_schema;

const GlossEntry* Glossary::find(const std::string& id) const {
    const auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

std::set<std::string> Glossary::lookup(std::string_view term) const {
    const auto it = variant_index_.find(normalize_term(term));
    return it == variant_index_.end() ? std::set<std::string>{} : it->second;
}

Glossary Glossary::build(std::vector<GlossEntry> entries) {
    Glossary g;
    for (auto& e : entries) {
        const std::string path = "/entries/" + e.id;
        if (e.id.empty() || normalize_term(e.id).empty()) throw SchemaError(path, "entry id is empty");
        auto& en = e.variants["en"];
        if (std::find(en.begin(), en.end(), e.id) == en.end()) en.insert(en.begin(), e.id);
        for (const auto& [lang, terms] : e.variants) {
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (normalize_term(terms[i]).empty()) {
                    throw SchemaError(path + "/variants/" + lang + "/" + std::to_string(i), "variant normalizes to empty");
                }
            }
        }
        const std::string id = e.id;
        if (!g.entries_.emplace(id, std::move(e)).second) throw SchemaError(path, "duplicate entry id");
    }
    for (const auto& [id, e] : g.entries_) {
        for (std::size_t i = 0; i < e.related_ids.size(); ++i) {
            if (!g.entries_.contains(e.related_ids[i])) {
                throw SchemaError("/entries/" + id + "/related/" + std::to_string(i),
                                  "dangling related id '" + e.related_ids[i] + "'");
            }
        }
        for (const auto& [lang, terms] : e.variants) {
            for (const auto& t : terms) g.variant_index_[normalize_term(t)].insert(id);
        }
    }
    return g;
}

Glossary parse_glossary(std::string_view text) {
    // nlohmann keeps the last of duplicate keys, so duplicates under "entries"
    // are caught while parsing.
    std::string top_key;
    std::set<std::string> seen_ids;
    std::string duplicate;
    const json::parser_callback_t watch = [&](int depth, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::key) {
            const auto key = parsed.get<std::string>();
            if (depth == 1) {
                top_key = key;
            } else if (depth == 2 && top_key == "entries" && !seen_ids.insert(key).second && duplicate.empty()) {
                duplicate = key;
            }
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(text.begin(), text.end(), watch);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("glossary: ") + e.what());
    }
    if (!duplicate.empty()) throw SchemaError("/entries/" + duplicate, "duplicate entry id");

    const json& entries = as_object(member(as_object(doc, "/"), "entries", ""), "/entries");
    std::vector<GlossEntry> out;
    for (const auto& [id, body] : entries.items()) {
        const std::string path = "/entries/" + id;
        as_object(body, path);
        GlossEntry e;
        e.id = id;
        if (const json* defs = optional_member(body, "definitions")) {
            for (const auto& [lang, textv] : as_object(*defs, path + "/definitions").items()) {
                e.definitions[lang] = as_string(textv, path + "/definitions/" + lang);
            }
        }
        if (const json* vars = optional_member(body, "variants")) {
            for (const auto& [lang, list] : as_object(*vars, path + "/variants").items()) {
                const std::string lpath = path + "/variants/" + lang;
                as_array(list, lpath);
                auto& terms = e.variants[lang];
                for (std::size_t i = 0; i < list.size(); ++i) terms.push_back(as_string(list[i], lpath + "/" + std::to_string(i)));
            }
        }
        if (const json* rel = optional_member(body, "related")) {
            as_array(*rel, path + "/related");
            for (std::size_t i = 0; i < rel->size(); ++i) {
                e.related_ids.push_back(as_string((*rel)[i], path + "/related/" + std::to_string(i)));
            }
        }
        out.push_back(std::move(e));
    }
    return Glossary::build(std::move(out));
}

Glossary load_glossary(const std::filesystem::path& path) { return parse_glossary(read_file_text(path)); }

std::vector<std::string> definition_terms(const GlossEntry& entry, const std::string& language,
                                          const Stopwords& stopwords) {
    const auto it = entry.definitions.find(language);
    if (it == entry.definitions.end()) {
        throw SchemaError("/entries/" + entry.id + "/definitions/" + language, "no definition in this language");
    }
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto& token : tokenize(it->second)) {
        if (stopwords.contains(token)) continue;
        if (seen.insert(token).second) out.push_back(std::move(token));
    }
    return out;
}

std::set<std::string> expand_terms(const Glossary& glossary, const std::set<std::string>& terms, int related_hops) {
    std::set<std::string> out;
    std::set<std::string> hit;
    for (const auto& t : terms) {
        std::string n = normalize_term(t);
        if (n.empty()) continue;
        for (const auto& id : glossary.lookup(n)) hit.insert(id);
        out.insert(std::move(n));
    }

    // Breadth-first over related links, bounded by related_hops.
    std::set<std::string> reached = hit;
    std::vector<std::string> layer(hit.begin(), hit.end());
    for (int hop = 0; hop < related_hops && !layer.empty(); ++hop) {
        std::vector<std::string> next;
        for (const auto& id : layer) {
            for (const auto& rel : glossary.find(id)->related_ids) {
                if (reached.insert(rel).second) next.push_back(rel);
            }
        }
        layer = std::move(next);
    }

    for (const auto& id : reached) {
        for (const auto& [lang, variants] : glossary.find(id)->variants) {
            for (const auto& v : variants) out.insert(normalize_term(v));
        }
    }
    return out;
}

}  // namespace treatise::lexicon
