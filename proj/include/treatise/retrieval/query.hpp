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

#include <set>
#include <string>
#include <string_view>

#include "treatise/lexicon/glossary.hpp"
#include "treatise/ontology/ontology.hpp"

namespace treatise::retrieval {

struct Query {
    std::set<std::string> raw;       // normalized
    std::set<std::string> expanded;  // always a superset of raw
};

/// Normalized tokens of the text, plus the whole normalized phrase when it has
/// more than one token. Expansion is off: expanded == raw.
Query parse_query(std::string_view text);

/// Glossary variants of every hit entry (and entries within `hops` related
/// links). With hops == 1 also adds the labels of the related concepts and
/// ancestors of every concept linked from a hit entry.
Query expand_query(const std::set<std::string>& terms, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, int hops = 0);

}  // namespace treatise::retrieval
