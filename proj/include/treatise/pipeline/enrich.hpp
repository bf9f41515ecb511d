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

#include <map>
#include <string>
#include <vector>

#include "treatise/catalog/record.hpp"
#include "treatise/lexicon/glossary.hpp"
#include "treatise/ontology/ontology.hpp"

namespace treatise::pipeline {

/// For every label whose normalized text hits a glossary entry linked (via a
/// concept's gloss_id) to an ontology concept, fills the missing concept_id
/// and definition. The smallest matching entry id, then concept id, wins.
/// Without a glossary hit, a concept whose id or label matches is used.
/// Labels are never removed, added or reordered.
std::vector<catalog::LabelAssignment> enrich_labels(std::vector<catalog::LabelAssignment> labels,
                                                    const lexicon::Glossary& glossary,
                                                    const ontology::Ontology& ontology,
                                                    const std::string& language = "en");

void enrich_record(catalog::ImageRecord& record, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, const std::string& language = "en");

}  // namespace treatise::pipeline
