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
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "treatise/ontology/ontology.hpp"

using namespace treatise;
using namespace treatise::ontology;

namespace {

const std::string kFixtures = TREATISE_FIXTURES_DIR;

Ontology ship_fixture() { return load_ontology(kFixtures + "/ontology.json"); }

std::string name(int i) { return "C" + std::to_string(i); }

std::vector<std::string> ids(const std::vector<ConceptRef>& refs) {
    std::vector<std::string> out;
    for (const auto& r : refs) out.push_back(r.id);
    return out;
}

bool contains(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

struct RandomOntology {
    std::vector<std::vector<int>> parents;
    std::vector<std::vector<int>> related;
    std::vector<Zone> zones;
    std::vector<Concept> concepts;
    std::vector<std::string> roots;
};

RandomOntology random_ontology(gen::Rng& rng) {
    RandomOntology r;
    const int n = gen::uniform(rng, 1, 50);
    r.parents = gen::dag(rng, n, gen::uniform(rng, 1, 20) / 100.0);
    r.related.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Concept c;
        c.id = name(i);
        for (int p : r.parents[static_cast<std::size_t>(i)]) c.is_a.push_back(name(p));
        for (int k = gen::uniform(rng, 0, 2); k > 0; --k) {
            const int j = gen::uniform(rng, 0, n - 1);
            r.related[static_cast<std::size_t>(i)].push_back(j);
            c.related_to.push_back(name(j));
        }
        c.zone = gen::coin(rng, 0.3) ? static_cast<Zone>(gen::uniform(rng, 0, 4)) : Zone::unspecified;
        r.zones.push_back(c.zone);
        if (r.parents[static_cast<std::size_t>(i)].empty()) r.roots.push_back(c.id);
        r.concepts.push_back(std::move(c));
    }
    return r;
}

}  // namespace

TEST_CASE("ship ontology fixture") {
    const auto o = ship_fixture();
    CHECK(o.concepts().size() >= 2);
    CHECK(contains(o.ancestors("RiderFrame"), "HullComponent"));
    CHECK(o.related("RiderFrame").contains("Frame"));
    CHECK(o.related("Frame").contains("RiderFrame"));
    CHECK(o.ancestors("HullComponent").empty());
    CHECK(o.related("Pulley").empty());
    CHECK(o.spatial_zone("Keel") == Zone::keel);
    CHECK(o.spatial_zone("Heel") == Zone::stern);
    CHECK(o.spatial_zone("Frame") == Zone::unspecified);
    CHECK_THROWS_AS(o.ancestors("Astrolabe"), UnknownConcept);

    const auto b = o.context_bundle("RiderFrame");
    CHECK(contains(ids(b.ancestors), "HullComponent"));
    CHECK(contains(ids(b.excluded), "AuxiliaryComponent"));
    CHECK(contains(ids(b.excluded), "InternalStructure"));
    CHECK(contains(ids(b.related), "Frame"));
    CHECK(render_context(b).find("hull component") != std::string::npos);

    const auto root = o.context_bundle("HullComponent");
    CHECK(root.ancestors.empty());
    CHECK(ids(root.excluded) == std::vector<std::string>{"AuxiliaryComponent", "InternalStructure", "JoiningAndFastening"});
}

TEST_CASE("ontology load errors") {
    CHECK_NOTHROW(parse_ontology(R"({"roots":[],"concepts":{"Keel":{}}})"));
    try {
        parse_ontology(R"({"roots":[],"concepts":{"A":{"is_a":["B"]},"B":{"is_a":["A"]}}})");
        FAIL("accepted a cycle");
    } catch (const CycleError& e) {
        const std::set<std::string> got(e.cycle().begin(), e.cycle().end());
        CHECK(got == std::set<std::string>{"A", "B"});
    }
    CHECK_THROWS_AS(parse_ontology(R"({"roots":[],"concepts":{"A":{"is_a":["Ghost"]}}})"), SchemaError);
    CHECK_THROWS_AS(parse_ontology(R"({"roots":["Ghost"],"concepts":{"A":{}}})"), SchemaError);
    CHECK_THROWS_AS(parse_ontology(R"({"roots":[],"concepts":{"A":{"zone":"mast"}}})"), SchemaError);
    CHECK_THROWS_AS(parse_ontology("{"), ParseError);
}

TEST_CASE("random ontologies agree with brute-force reasoning") {
    gen::Rng rng(59);
    for (int iter = 0; iter < 50; ++iter) {
        auto r = random_ontology(rng);
        const auto o = Ontology::build(r.concepts, r.roots);
        const auto reach = oracle::reachability(r.parents);
        const std::size_t n = r.parents.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto anc = o.ancestors(name(static_cast<int>(i)));
            std::set<std::string> expected;
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[i][j]) expected.insert(name(static_cast<int>(j)));
            }
            CHECK(std::set<std::string>(anc.begin(), anc.end()) == expected);
            CHECK(anc.size() == expected.size());
            CHECK_FALSE(contains(anc, name(static_cast<int>(i))));

            std::set<std::string> rel;
            for (std::size_t j = 0; j < n; ++j) {
                const auto& a = r.related[i];
                const auto& b = r.related[j];
                if (std::find(a.begin(), a.end(), static_cast<int>(j)) != a.end() ||
                    std::find(b.begin(), b.end(), static_cast<int>(i)) != b.end()) {
                    rel.insert(name(static_cast<int>(j)));
                }
            }
            CHECK(o.related(name(static_cast<int>(i))) == rel);

            // Nearest specified zone by breadth-first search over parents.
            Zone zone = Zone::unspecified;
            std::deque<std::size_t> q{i};
            std::set<std::size_t> seen{i};
            while (!q.empty() && zone == Zone::unspecified) {
                const auto c = q.front();
                q.pop_front();
                if (r.zones[c] != Zone::unspecified) {
                    zone = r.zones[c];
                    break;
                }
                for (int p : r.parents[c]) {
                    if (seen.insert(static_cast<std::size_t>(p)).second) q.push_back(static_cast<std::size_t>(p));
                }
            }
            CHECK(o.spatial_zone(name(static_cast<int>(i))) == zone);

            const auto b = o.context_bundle(name(static_cast<int>(i)));
            CHECK(ids(b.ancestors) == anc);
            CHECK(b.zone == o.spatial_zone(name(static_cast<int>(i))));
            std::vector<std::string> rel_ids = ids(b.related);
            CHECK(std::set<std::string>(rel_ids.begin(), rel_ids.end()) == rel);
            for (const auto& root : r.roots) {
                const bool excluded = contains(ids(b.excluded), root);
                CHECK(excluded == (!expected.contains(root) && root != name(static_cast<int>(i))));
            }
        }

        // Inject a back edge from an ancestor to a descendant: always a cycle.
        std::vector<std::pair<std::size_t, int>> edges;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[i][j]) edges.push_back({j, static_cast<int>(i)});
            }
        }
        if (!edges.empty()) {
            const auto [from, to] = edges[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(edges.size()) - 1))];
            auto cyclic = r.concepts;
            cyclic[from].is_a.push_back(name(to));
            CHECK_THROWS_AS(Ontology::build(cyclic, r.roots), CycleError);
        }
        auto self = r.concepts;
        self[0].is_a.push_back(name(0));
        CHECK_THROWS_AS(Ontology::build(self, r.roots), CycleError);
    }
}
