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
#include "treatise/pipeline/enrich.hpp"

#include "treatise/lexicon/normalize.hpp"

namespace treatise::pipeline {

namespace {

const std::string* pick_definition(const lexicon::GlossEntry& entry, const std::string& language) {
    for (const std::string& lang : {language, std::string("en")}) {
        if (const auto it = entry.definitions.find(lang); it != entry.definitions.end()) return &it->second;
    }
    return entry.definitions.empty() ? nullptr : &entry.definitions.begin()->second;
}

}  // namespace

std::vector<catalog::LabelAssignment> enrich_labels(std::vector<catalog::LabelAssignment> labels,
                                                    const lexicon::Glossary& glossary,
                                                    const ontology::Ontology& ontology, const std::string& language) {
    for (auto& label : labels) {
        bool linked = false;
        for (const auto& entry_id : glossary.lookup(label.text)) {
            const auto concepts = ontology.concepts_for_gloss(entry_id);
            if (concepts.empty()) continue;
            if (!label.concept_id) label.concept_id = concepts.front();
            if (!label.definition) {
                if (const std::string* d = pick_definition(*glossary.find(entry_id), language)) label.definition = *d;
            }
            linked = true;
            break;
        }
        if (!linked && !label.concept_id) {
            const auto concepts = ontology.concepts_for_label(lexicon::normalize_term(label.text));
            if (!concepts.empty()) label.concept_id = concepts.front();
        }
    }
    return labels;
}

void enrich_record(catalog::ImageRecord& record, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, const std::string& language) {
    for (auto& [id, labels] : record.assignments) {
        labels = enrich_labels(std::move(labels), glossary, ontology, language);
    }
}

}  // namespace treatise::pipeline
