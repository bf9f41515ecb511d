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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treatise/common/error.hpp"

namespace treatise::ontology {

enum class Zone { bow, stern, keel, bottom, deck, unspecified };

const char* to_string(Zone zone);
/// Throws SchemaError(path, ...) on an unknown zone name.
Zone zone_from_string(const std::string& name, const std::string& path = "/zone");

struct Concept {
    std::string id;
    std::string label;
    std::vector<std::string> is_a;
    std::vector<std::string> part_of;
    std::vector<std::string> related_to;
    Zone zone = Zone::unspecified;
    std::optional<std::string> gloss_id;
};

struct ConceptRef {
    std::string id;
    std::string label;
    friend bool operator==(const ConceptRef&, const ConceptRef&) = default;
};

/// Prompt context for one concept: where it sits in the hierarchy, which
/// categories it does not belong to, and what it relates to.
struct ContextBundle {
    ConceptRef subject;
    std::vector<ConceptRef> ancestors;  // nearest first
    std::vector<ConceptRef> excluded;   // category roots outside the ancestor closure
    std::vector<ConceptRef> related;    // ascending id
    std::vector<ConceptRef> part_of;    // as listed
    Zone zone = Zone::unspecified;      // inherited
};

class CycleError : public SchemaError {
public:
    explicit CycleError(std::vector<std::string> cycle);
    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

class UnknownConcept : public Error {
public:
    explicit UnknownConcept(const std::string& id) : Error(ErrorKind::data, "unknown concept '" + id + "'") {}
};

/// Concept graph with an acyclic is_a relation; immutable once built.
class Ontology {
public:
    /// Validates references, roots and is_a acyclicity. Throws SchemaError
    /// for dangling ids and CycleError (listing the cycle) for is_a cycles.
    static Ontology build(std::vector<Concept> concepts, std::vector<std::string> roots);

    const std::map<std::string, Concept>& concepts() const { return concepts_; }
    const std::vector<std::string>& roots() const { return roots_; }
    const Concept* find(const std::string& id) const;
    const Concept& at(const std::string& id) const;

    /// Transitive is_a closure in breadth-first order, deduplicated, without `id`.
    std::vector<std::string> ancestors(const std::string& id) const;
    /// One-hop symmetric related_to: b is related to a iff either lists the other.
    std::set<std::string> related(const std::string& id) const;
    /// Own zone if specified, else the first specified zone among ancestors (BFS order).
    Zone spatial_zone(const std::string& id) const;
    ContextBundle context_bundle(const std::string& id) const;

    /// Concepts whose gloss_id names `entry_id`, ascending.
    std::vector<std::string> concepts_for_gloss(const std::string& entry_id) const;
    /// Concepts whose id or label normalizes to `normalized_text`.
    std::vector<std::string> concepts_for_label(const std::string& normalized_text) const;

private:
    std::map<std::string, Concept> concepts_;
    std::vector<std::string> roots_;
    std::map<std::string, std::set<std::string>> related_sym_;
    std::map<std::string, std::vector<std::string>> by_gloss_;
    std::map<std::string, std::vector<std::string>> by_label_;
};

/// Parses {"roots": [...], "concepts": {"<id>": {label, is_a, part_of, related_to, zone, gloss_id}}}.
Ontology parse_ontology(std::string_view text);
Ontology load_ontology(const std::filesystem::path& path);

/// One-line human-readable context, e.g.
/// "Rider Frame: is a Hull Component; not part of Auxiliary Component, Internal Structure; related to Frame".
std::string render_context(const ContextBundle& bundle);

}  // namespace treatise::ontology
