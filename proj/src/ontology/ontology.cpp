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
#include "treatise/ontology/ontology.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "treatise/common/files.hpp"
#include "treatise/common/json_schema.hpp"
#include "treatise/lexicon/normalize.hpp"

namespace treatise::ontology {

using nlohmann::json;
using namespace json_schema;

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : " -> ") + id;
    return out;
}

// Returns one is_a cycle (first node repeated at the end is omitted), or empty.
std::vector<std::string> find_cycle(const std::map<std::string, Concept>& concepts) {
    enum class Color { white, grey, black };
    std::map<std::string, Color> color;
    for (const auto& [id, c] : concepts) color[id] = Color::white;

    std::vector<std::string> stack;
    std::vector<std::string> cycle;
    // Iterative DFS: frames of (id, next parent index).
    for (const auto& [root, unused] : concepts) {
        if (color[root] != Color::white) continue;
        std::vector<std::pair<std::string, std::size_t>> frames{{root, 0}};
        color[root] = Color::grey;
        stack.assign(1, root);
        while (!frames.empty()) {
            auto& [id, next] = frames.back();
            const auto& parents = concepts.at(id).is_a;
            if (next < parents.size()) {
                const std::string parent = parents[next++];
                if (color[parent] == Color::grey) {
                    const auto it = std::find(stack.begin(), stack.end(), parent);
                    cycle.assign(it, stack.end());
                    return cycle;
                }
                if (color[parent] == Color::white) {
                    color[parent] = Color::grey;
                    stack.push_back(parent);
                    frames.emplace_back(parent, 0);
                }
            } else {
                color[id] = Color::black;
                stack.pop_back();
                frames.pop_back();
            }
        }
    }
    return cycle;
}

}  // namespace

const char* to_string(Zone zone) {
    switch (zone) {
        case Zone::bow: return "bow";
        case Zone::stern: return "stern";
        case Zone::keel: return "keel";
        case Zone::bottom: return "bottom";
        case Zone::deck: return "deck";
        case Zone::unspecified: return "unspecified";
    }
    return "unspecified";
}

Zone zone_from_string(const std::string& name, const std::string& path) {
    for (Zone z : {Zone::bow, Zone::stern, Zone::keel, Zone::bottom, Zone::deck, Zone::unspecified}) {
        if (name == to_string(z)) return z;
    }
    throw SchemaError(path, "unknown zone '" + name + "'");
}

CycleError::CycleError(std::vector<std::string> cycle)
    : SchemaError("/concepts/" + (cycle.empty() ? std::string() : cycle.front()) + "/is_a",
                  "is_a cycle: " + join_ids(cycle)),
      cycle_(std::move(cycle)) {}

const Concept* Ontology::find(const std::string& id) const {
    const auto it = concepts_.find(id);
    return it == concepts_.end() ? nullptr : &it->second;
}

const Concept& Ontology::at(const std::string& id) const {
    const Concept* c = find(id);
    if (c == nullptr) throw UnknownConcept(id);
    return *c;
}

Ontology Ontology::build(std::vector<Concept> concepts, std::vector<std::string> roots) {
    Ontology o;
    for (auto& c : concepts) {
        const std::string id = c.id;
        if (id.empty()) throw SchemaError("/concepts", "empty concept id");
        if (c.label.empty()) c.label = id;
        if (!o.concepts_.emplace(id, std::move(c)).second) throw SchemaError("/concepts/" + id, "duplicate concept id");
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!o.concepts_.contains(roots[i])) {
            throw SchemaError("/roots/" + std::to_string(i), "category root '" + roots[i] + "' is not a concept");
        }
    }
    o.roots_ = std::move(roots);

    for (const auto& [id, c] : o.concepts_) {
        auto check = [&](const std::vector<std::string>& refs, const char* field) {
            for (std::size_t i = 0; i < refs.size(); ++i) {
                if (!o.concepts_.contains(refs[i])) {
                    throw SchemaError("/concepts/" + id + "/" + field + "/" + std::to_string(i),
                                      "dangling reference '" + refs[i] + "'");
                }
            }
        };
        check(c.is_a, "is_a");
        check(c.part_of, "part_of");
        check(c.related_to, "related_to");
    }
    if (auto cycle = find_cycle(o.concepts_); !cycle.empty()) throw CycleError(std::move(cycle));

    for (const auto& [id, c] : o.concepts_) {
        o.related_sym_[id];
        for (const auto& r : c.related_to) {
            o.related_sym_[id].insert(r);
            o.related_sym_[r].insert(id);
        }
        if (c.gloss_id) o.by_gloss_[*c.gloss_id].push_back(id);
        for (const auto& key : {lexicon::normalize_term(id), lexicon::normalize_term(c.label)}) {
            auto& ids = o.by_label_[key];
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        }
    }
    return o;
}

std::vector<std::string> Ontology::ancestors(const std::string& id) const {
    at(id);
    std::vector<std::string> out;
    std::set<std::string> seen{id};
    std::deque<std::string> queue{id};
    while (!queue.empty()) {
        const std::string cur = queue.front();
        queue.pop_front();
        for (const auto& parent : concepts_.at(cur).is_a) {
            if (seen.insert(parent).second) {
                out.push_back(parent);
                queue.push_back(parent);
            }
        }
    }
    return out;
}

std::set<std::string> Ontology::related(const std::string& id) const {
    at(id);
    return related_sym_.at(id);
}

Zone Ontology::spatial_zone(const std::string& id) const {
    const Concept& c = at(id);
    if (c.zone != Zone::unspecified) return c.zone;
    for (const auto& a : ancestors(id)) {
        const Zone z = concepts_.at(a).zone;
        if (z != Zone::unspecified) return z;
    }
    return Zone::unspecified;
}

ContextBundle Ontology::context_bundle(const std::string& id) const {
    const Concept& c = at(id);
    auto ref = [this](const std::string& cid) { return ConceptRef{cid, concepts_.at(cid).label}; };

    ContextBundle b;
    b.subject = ref(id);
    const auto anc = ancestors(id);
    for (const auto& a : anc) b.ancestors.push_back(ref(a));
    for (const auto& root : roots_) {
        if (root != id && std::find(anc.begin(), anc.end(), root) == anc.end()) b.excluded.push_back(ref(root));
    }
    for (const auto& r : related(id)) b.related.push_back(ref(r));
    for (const auto& p : c.part_of) b.part_of.push_back(ref(p));
    b.zone = spatial_zone(id);
    return b;
}

std::vector<std::string> Ontology::concepts_for_gloss(const std::string& entry_id) const {
    const auto it = by_gloss_.find(entry_id);
    if (it == by_gloss_.end()) return {};
    auto ids = it->second;
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> Ontology::concepts_for_label(const std::string& normalized_text) const {
    const auto it = by_label_.find(normalized_text);
    if (it == by_label_.end()) return {};
    auto ids = it->second;
    std::sort(ids.begin(), ids.end());
    return ids;
}

Ontology parse_ontology(std::string_view text) {
    const json doc = json_schema::parse(text, "ontology");
    as_object(doc, "/");
    std::vector<std::string> roots;
    const json& r = as_array(member(doc, "roots", ""), "/roots");
    for (std::size_t i = 0; i < r.size(); ++i) roots.push_back(as_string(r[i], "/roots/" + std::to_string(i)));

    std::vector<Concept> concepts;
    for (const auto& [id, body] : as_object(member(doc, "concepts", ""), "/concepts").items()) {
        const std::string path = "/concepts/" + id;
        as_object(body, path);
        Concept c;
        c.id = id;
        if (const json* l = optional_member(body, "label")) c.label = as_string(*l, path + "/label");
        auto list = [&](const char* field, std::vector<std::string>& out) {
            if (const json* v = optional_member(body, field)) {
                const std::string fpath = path + "/" + field;
                as_array(*v, fpath);
                for (std::size_t i = 0; i < v->size(); ++i) out.push_back(as_string((*v)[i], fpath + "/" + std::to_string(i)));
            }
        };
        list("is_a", c.is_a);
        list("part_of", c.part_of);
        list("related_to", c.related_to);
        if (const json* z = optional_member(body, "zone")) c.zone = zone_from_string(as_string(*z, path + "/zone"), path + "/zone");
        if (const json* g = optional_member(body, "gloss_id")) c.gloss_id = as_string(*g, path + "/gloss_id");
        concepts.push_back(std::move(c));
    }
    return Ontology::build(std::move(concepts), std::move(roots));
}

Ontology load_ontology(const std::filesystem::path& path) { return parse_ontology(read_file_text(path)); }

std::string render_context(const ContextBundle& bundle) {
    auto labels = [](const std::vector<ConceptRef>& refs) {
        std::string out;
        for (const auto& r : refs) out += (out.empty() ? "" : ", ") + r.label;
        return out;
    };
    std::string out = bundle.subject.label;
    std::vector<std::string> parts;
    if (!bundle.ancestors.empty()) parts.push_back("is a " + labels(bundle.ancestors));
    if (!bundle.excluded.empty()) parts.push_back("not part of " + labels(bundle.excluded));
    if (!bundle.part_of.empty()) parts.push_back("part of " + labels(bundle.part_of));
    if (!bundle.related.empty()) parts.push_back("related to " + labels(bundle.related));
    if (bundle.zone != Zone::unspecified) parts.push_back(std::string("located at the ") + to_string(bundle.zone));
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? ": " : "; ") + parts[i];
    return out;
}

}  // namespace treatise::ontology
