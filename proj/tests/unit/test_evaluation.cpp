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

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "treatise/evaluation/evaluate.hpp"

using namespace treatise;
using namespace treatise::evaluation;
using catalog::BoundingBox;
using catalog::ImageRecord;
using catalog::LabelSource;

namespace {

const std::string kFixtures = TREATISE_FIXTURES_DIR;

struct Knowledge {
    lexicon::Glossary g = lexicon::load_glossary(kFixtures + "/glossary.json");
    ontology::Ontology o = ontology::load_ontology(kFixtures + "/ontology.json");
};

const Knowledge& knowledge() {
    static const Knowledge k;
    return k;
}

ImageRecord boxes(const std::vector<std::pair<BoundingBox, std::string>>& items, int w = 16, int h = 16) {
    ImageRecord r;
    r.image_id = sha256_hex("eval");
    r.width = w;
    r.height = h;
    std::int32_t id = 1;
    for (const auto& [b, text] : items) {
        std::vector<std::size_t> px;
        for (int y = b.y; y < b.y + b.h; ++y) {
            for (int x = b.x; x < b.x + b.w; ++x) px.push_back(static_cast<std::size_t>(y * w + x));
        }
        r.segments.push_back(raster::segment_from_mask(id, raster::rle_from_indices(px, w, h)));
        r.assignments[id].push_back({text, 1.0, LabelSource::human, {}, {}});
        ++id;
    }
    r.provenance.timestamp = "2026-10-16T00:00:00Z";
    return r;
}

EvalItem item(BoundingBox b, double conf, std::string text = "x") { return {b, std::move(text), std::nullopt, conf}; }

BoundingBox random_box(gen::Rng& rng) {
    const int w = gen::uniform(rng, 1, 6), h = gen::uniform(rng, 1, 6);
    return {gen::uniform(rng, 0, 10 - w), gen::uniform(rng, 0, 10 - h), w, h};
}

}  // namespace

TEST_CASE("label scores") {
    const auto& k = knowledge();
    CHECK(label_score("Keel", "keel", k.g, k.o) == 1.0);
    CHECK(label_score("quilha", "keel", k.g, k.o) == 1.0);
    CHECK(label_score("rider frame", "frame", k.g, k.o) == 0.25);
    CHECK(label_score("frame", "rider frame", k.g, k.o) == 0.25);
    CHECK(label_score("heel", "sternpost", k.g, k.o) == 0.5);
    CHECK(label_score("pulley", "axes", k.g, k.o) == 0.0);
    ScoreParams p;
    p.c_related = 0.1;
    CHECK(label_score("rider frame", "frame", k.g, k.o, p) == 0.1);

    gen::Rng rng(83);
    for (int i = 0; i < 300; ++i) {
        const auto a = gen::word(rng), b = gen::word(rng);
        const double s = label_score(a, b, k.g, k.o);
        CHECK(s == label_score(b, a, k.g, k.o));
        CHECK(label_score(a, a, k.g, k.o) == 1.0);
        CHECK((s == 0.0 || s == 0.25 || s == 0.5 || s == 1.0));
    }
}

TEST_CASE("matching examples") {
    const std::vector<EvalItem> truth{item({0, 0, 4, 4}, 1), item({6, 6, 3, 3}, 1)};
    const auto same = match_detections(truth, truth);
    REQUIRE(same.size() == 2);
    for (const auto& m : same) CHECK(m.iou == 1.0);
    CHECK(match_detections({}, truth).empty());

    // The more confident prediction claims the shared truth box.
    const std::vector<EvalItem> preds{item({0, 0, 4, 3}, 0.2), item({0, 0, 4, 4}, 0.9)};
    const auto m = match_detections(preds, {truth[0]});
    REQUIRE(m.size() == 1);
    CHECK(m[0].pred == 1);
}

TEST_CASE("evaluation axioms") {
    const auto& k = knowledge();
    const auto r = boxes({{{0, 0, 4, 4}, "keel"}, {{6, 6, 4, 4}, "sternpost"}});
    const auto rep = evaluate(r, as_ground_truth(r), k.g, k.o);
    CHECK(rep.precision == 1.0);
    CHECK(rep.recall == 1.0);
    CHECK(rep.f1 == 1.0);
    CHECK(rep.soft_f1 == 1.0);
    CHECK(rep.mean_iou == 1.0);
    CHECK(rep.mean_label_score == 1.0);

    const auto wrong = boxes({{{0, 0, 4, 4}, "pulley"}, {{6, 6, 4, 4}, "anchor"}});
    const auto bad = evaluate(wrong, as_ground_truth(r), k.g, k.o);
    CHECK(bad.f1 == 1.0);
    CHECK(bad.soft_f1 == 0.0);

    // One exact, one ancestor match at IoU 0.6: box 5x2 vs 3x2 shares 6 of 10 pixels.
    const auto truth = boxes({{{0, 0, 4, 4}, "keel"}, {{6, 6, 5, 2}, "sternpost"}});
    const auto pred = boxes({{{0, 0, 4, 4}, "keel"}, {{6, 6, 3, 2}, "heel"}});
    const auto hand = evaluate(pred, as_ground_truth(truth), k.g, k.o);
    CHECK(hand.tp == 2);
    CHECK(hand.fp == 0);
    CHECK(hand.fn == 0);
    CHECK(hand.mean_iou == doctest::Approx((1.0 + 0.6) / 2));
    CHECK(hand.mean_label_score == doctest::Approx(0.75));
    CHECK(hand.soft_f1 == doctest::Approx(2 * 1.5 / 4));

    const auto none = evaluate(boxes({}), as_ground_truth(truth), k.g, k.o);
    CHECK(none.tp == 0);
    CHECK(none.fn == 2);
    CHECK(none.f1 == 0.0);

    auto other = truth;
    other.image_id = sha256_hex("elsewhere");
    CHECK_THROWS_AS(evaluate(pred, other, k.g, k.o), Error);
}

TEST_CASE("aggregation") {
    const auto& k = knowledge();
    const auto truth = as_ground_truth(boxes({{{0, 0, 4, 4}, "keel"}, {{6, 6, 5, 2}, "sternpost"}}));
    const auto a = evaluate(boxes({{{0, 0, 4, 4}, "keel"}}), truth, k.g, k.o);
    CHECK(aggregate({a}).f1 == a.f1);
    const auto twice = aggregate({a, a});
    CHECK(twice.precision == a.precision);
    CHECK(twice.recall == a.recall);
    CHECK(twice.soft_f1 == a.soft_f1);
    CHECK_THROWS(aggregate({}));

    gen::Rng rng(89);
    for (int i = 0; i < 100; ++i) {
        std::vector<EvalReport> reports;
        std::size_t tp = 0, fp = 0, fn = 0;
        double lbl = 0;
        for (int n = gen::uniform(rng, 2, 5); n > 0; --n) {
            EvalReport r;
            r.tp = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
            r.fp = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
            r.fn = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
            r.sum_iou = static_cast<double>(r.tp) * 0.7;
            r.sum_label_score = static_cast<double>(r.tp) * 0.5;
            finalize(r);
            tp += r.tp;
            fp += r.fp;
            fn += r.fn;
            lbl += r.sum_label_score;
            reports.push_back(r);
        }
        const auto total = aggregate(reports);
        const double den = 2.0 * tp + fp + fn;
        CHECK(total.f1 == doctest::Approx(den > 0 ? 2.0 * tp / den : 0.0));
        CHECK(total.soft_f1 == doctest::Approx(den > 0 ? 2.0 * lbl / den : 0.0));
        CHECK(total.soft_f1 <= total.f1 + 1e-12);
        const auto macro = aggregate(reports, Averaging::macro);
        double mean_f1 = 0;
        for (const auto& r : reports) mean_f1 += r.f1;
        CHECK(macro.f1 == doctest::Approx(mean_f1 / static_cast<double>(reports.size())));
    }
}

TEST_CASE("confidence scaling leaves matching unchanged") {
    gen::Rng rng(97);
    for (int i = 0; i < 100; ++i) {
        std::vector<EvalItem> preds, truth;
        for (int n = gen::uniform(rng, 0, 6); n > 0; --n) preds.push_back(item(random_box(rng), gen::uniform(rng, 1, 100) / 100.0));
        for (int n = gen::uniform(rng, 0, 6); n > 0; --n) truth.push_back(item(random_box(rng), 1.0));
        const double c = gen::uniform(rng, 1, 1000) / 97.0;
        auto scaled = preds;
        for (auto& p : scaled) p.confidence *= c;
        CHECK(match_detections(preds, truth) == match_detections(scaled, truth));
    }
}

TEST_CASE("greedy versus exhaustive matching") {
    gen::Rng rng(101);
    int disagreements = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<EvalItem> preds, truth;
        std::vector<oracle::Box> pb, tb;
        for (int n = gen::uniform(rng, 0, 6); n > 0; --n) {
            const auto b = random_box(rng);
            preds.push_back(item(b, gen::uniform(rng, 1, 100) / 100.0));
            pb.push_back({b.x, b.y, b.w, b.h});
        }
        for (int n = gen::uniform(rng, 0, 6); n > 0; --n) {
            const auto b = random_box(rng);
            truth.push_back(item(b, 1.0));
            tb.push_back({b.x, b.y, b.w, b.h});
        }
        const auto greedy = match_detections(preds, truth, 0.3);
        double sum = 0;
        for (const auto& m : greedy) sum += m.iou;
        const auto best = oracle::exhaustive_matching(pb, tb, 0.3);
        CHECK(greedy.size() <= best.first);
        if (greedy.size() != best.first || std::abs(sum - best.second) > 1e-9) ++disagreements;
    }
    MESSAGE("greedy/exhaustive disagreements: " << disagreements << " of 200");
}

TEST_CASE("report rendering") {
    EvalReport r;
    r.image_id = "abc";
    r.tp = 1;
    finalize(r);
    const auto table = render_table({r}, r);
    CHECK(table.find("aggregate") != std::string::npos);
    CHECK(reports_to_json({r}, r)["aggregate"]["f1"] == 1.0);
}
