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
#include "treatise/retrieval/query.hpp"

#include "treatise/lexicon/normalize.hpp"

namespace treatise::retrieval {

Query parse_query(std::string_view text) {
    Query q;
    std::size_t tokens = 0;
    for (const auto& token : lexicon::tokenize(text)) {
        std::string n = lexicon::normalize_term(token);
        if (n.empty()) continue;
        q.raw.insert(std::move(n));
        ++tokens;
    }
    if (tokens > 1) {
        if (std::string phrase = lexicon::normalize_term(text); !phrase.empty()) q.raw.insert(std::move(phrase));
    }
    q.expanded = q.raw;
    return q;
}

Query expand_query(const std::set<std::string>& terms, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, int hops) {
    Query q;
    for (const auto& t : terms) {
        if (std::string n = lexicon::normalize_term(t); !n.empty()) q.raw.insert(std::move(n));
    }
    q.expanded = lexicon::expand_terms(glossary, q.raw, hops);
    q.expanded.insert(q.raw.begin(), q.raw.end());
    if (hops < 1) return q;

    std::set<std::string> concepts;
    for (const auto& t : q.raw) {
        for (const auto& entry : glossary.lookup(t)) {
            for (const auto& c : ontology.concepts_for_gloss(entry)) concepts.insert(c);
        }
    }
    auto add_label = [&](const std::string& id) {
        if (std::string n = lexicon::normalize_term(ontology.at(id).label); !n.empty()) q.expanded.insert(std::move(n));
    };
    for (const auto& c : concepts) {
        for (const auto& r : ontology.related(c)) add_label(r);
        for (const auto& a : ontology.ancestors(c)) add_label(a);
    }
    return q;
}

}  // namespace treatise::retrieval
