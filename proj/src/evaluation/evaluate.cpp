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
#include "treatise/evaluation/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "treatise/catalog/geometry.hpp"
#include "treatise/catalog/sidecar.hpp"
#include "treatise/common/error.hpp"
#include "treatise/lexicon/normalize.hpp"

namespace treatise::evaluation {

using nlohmann::json;

namespace {

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

std::vector<EvalItem> items_of(const catalog::ImageRecord& record) {
    std::vector<EvalItem> items;
    std::vector<const catalog::Segment*> segs;
    for (const auto& s : record.segments) segs.push_back(&s);
    std::sort(segs.begin(), segs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* s : segs) {
        const auto it = record.assignments.find(s->id);
        if (it == record.assignments.end() || it->second.empty()) continue;
        const catalog::LabelAssignment* top = &it->second.front();
        for (const auto& l : it->second) {
            if (l.confidence > top->confidence) top = &l;
        }
        items.push_back({s->bbox, top->text, top->concept_id, top->confidence});
    }
    return items;
}

catalog::ImageRecord as_ground_truth(catalog::ImageRecord record) {
    for (auto& [id, labels] : record.assignments) {
        for (auto& l : labels) l.source = catalog::LabelSource::human;
    }
    return record;
}

catalog::ImageRecord load_ground_truth(const std::filesystem::path& path) {
    catalog::ImageRecord truth = catalog::read_sidecar(path);
    for (const auto& [id, labels] : truth.assignments) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].source != catalog::LabelSource::human) {
                throw SchemaError("/assignments/" + std::to_string(id) + "/" + std::to_string(i) + "/source",
                                  "ground truth labels must have source human");
            }
        }
    }
    return truth;
}

std::vector<Match> match_detections(const std::vector<EvalItem>& predicted, const std::vector<EvalItem>& truth,
                                    double iou_threshold) {
    std::vector<std::size_t> order(predicted.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return predicted[a].confidence > predicted[b].confidence; });
    std::vector<bool> used(truth.size(), false);
    std::vector<Match> matches;
    for (std::size_t p : order) {
        std::size_t best = truth.size();
        double best_iou = 0.0;
        for (std::size_t t = 0; t < truth.size(); ++t) {
            if (used[t]) continue;
            const double iou = catalog::box_iou(predicted[p].box, truth[t].box);
            if (iou >= iou_threshold && (best == truth.size() || iou > best_iou)) {
                best = t;
                best_iou = iou;
            }
        }
        if (best == truth.size()) continue;
        used[best] = true;
        matches.push_back({p, best, best_iou});
    }
    return matches;
}

std::vector<std::string> resolve_concepts(const std::string& text, const std::optional<std::string>& concept_id,
                                          const lexicon::Glossary& glossary, const ontology::Ontology& ontology) {
    std::set<std::string> out;
    if (concept_id && ontology.find(*concept_id)) out.insert(*concept_id);
    for (const auto& entry : glossary.lookup(text)) {
        for (const auto& c : ontology.concepts_for_gloss(entry)) out.insert(c);
    }
    for (const auto& c : ontology.concepts_for_label(lexicon::normalize_term(text))) out.insert(c);
    return {out.begin(), out.end()};
}

double label_score(const EvalItem& a, const EvalItem& b, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, const ScoreParams& params) {
    const std::string na = lexicon::normalize_term(a.text);
    if (!na.empty() && na == lexicon::normalize_term(b.text)) return 1.0;
    const auto ca = resolve_concepts(a.text, a.concept_id, glossary, ontology);
    const auto cb = resolve_concepts(b.text, b.concept_id, glossary, ontology);
    double best = 0.0;
    for (const auto& x : ca) {
        const auto anc_x = ontology.ancestors(x);
        const auto rel_x = ontology.related(x);
        for (const auto& y : cb) {
            if (x == y) return 1.0;
            const auto anc_y = ontology.ancestors(y);
            const bool ancestor = std::find(anc_x.begin(), anc_x.end(), y) != anc_x.end() ||
                                  std::find(anc_y.begin(), anc_y.end(), x) != anc_y.end();
            if (ancestor) best = std::max(best, params.c_ancestor);
            if (rel_x.contains(y)) best = std::max(best, params.c_related);
        }
    }
    return best;
}

double label_score(const std::string& a, const std::string& b, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, const ScoreParams& params) {
    return label_score(EvalItem{{}, a, std::nullopt, 1.0}, EvalItem{{}, b, std::nullopt, 1.0}, glossary, ontology,
                       params);
}

void finalize(EvalReport& r) {
    const double tp = static_cast<double>(r.tp);
    r.precision = ratio(tp, tp + static_cast<double>(r.fp));
    r.recall = ratio(tp, tp + static_cast<double>(r.fn));
    const double den = 2.0 * tp + static_cast<double>(r.fp) + static_cast<double>(r.fn);
    r.f1 = ratio(2.0 * tp, den);
    r.soft_f1 = ratio(2.0 * r.sum_label_score, den);
    r.mean_iou = ratio(r.sum_iou, tp);
    r.mean_label_score = ratio(r.sum_label_score, tp);
}

EvalReport evaluate(const catalog::ImageRecord& predicted, const catalog::ImageRecord& truth,
                    const lexicon::Glossary& glossary, const ontology::Ontology& ontology, const ScoreParams& params) {
    if (predicted.image_id != truth.image_id) {
        throw Error(ErrorKind::data, "image id mismatch: predicted " + predicted.image_id + ", truth " + truth.image_id);
    }
    if (predicted.width != truth.width || predicted.height != truth.height) {
        throw Error(ErrorKind::data, "frame mismatch for image " + truth.image_id);
    }
    const auto pred = items_of(predicted);
    const auto gold = items_of(truth);
    EvalReport r;
    r.image_id = truth.image_id;
    for (const auto& m : match_detections(pred, gold, params.iou_threshold)) {
        ++r.tp;
        r.sum_iou += m.iou;
        r.sum_label_score += label_score(pred[m.pred], gold[m.truth], glossary, ontology, params);
    }
    r.fp = pred.size() - r.tp;
    r.fn = gold.size() - r.tp;
    finalize(r);
    return r;
}

EvalReport aggregate(const std::vector<EvalReport>& reports, Averaging averaging) {
    if (reports.empty()) throw Error(ErrorKind::data, "aggregate needs at least one report");
    if (reports.size() == 1) return reports.front();
    EvalReport total;
    total.image_id = "*";
    for (const auto& r : reports) {
        total.tp += r.tp;
        total.fp += r.fp;
        total.fn += r.fn;
        total.sum_iou += r.sum_iou;
        total.sum_label_score += r.sum_label_score;
    }
    finalize(total);
    if (averaging == Averaging::macro) {
        const double n = static_cast<double>(reports.size());
        auto mean = [&](double EvalReport::*field) {
            double s = 0.0;
            for (const auto& r : reports) s += r.*field;
            return s / n;
        };
        total.precision = mean(&EvalReport::precision);
        total.recall = mean(&EvalReport::recall);
        total.f1 = mean(&EvalReport::f1);
        total.soft_f1 = mean(&EvalReport::soft_f1);
        total.mean_iou = mean(&EvalReport::mean_iou);
        total.mean_label_score = mean(&EvalReport::mean_label_score);
    }
    return total;
}

json report_to_json(const EvalReport& r) {
    return {{"image_id", r.image_id},   {"tp", r.tp},
            {"fp", r.fp},               {"fn", r.fn},
            {"precision", r.precision}, {"recall", r.recall},
            {"f1", r.f1},               {"mean_iou", r.mean_iou},
            {"mean_label_score", r.mean_label_score}, {"soft_f1", r.soft_f1}};
}

json reports_to_json(const std::vector<EvalReport>& per_image, const EvalReport& total) {
    json images = json::array();
    for (const auto& r : per_image) images.push_back(report_to_json(r));
    return {{"images", images}, {"aggregate", report_to_json(total)}};
}

std::string render_table(const std::vector<EvalReport>& per_image, const EvalReport& total) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %5s %5s %5s %9s %9s %9s %9s %9s %9s\n", "image", "tp", "fp", "fn",
                  "precision", "recall", "f1", "mean_iou", "mean_lbl", "soft_f1");
    out += line;
    auto row = [&](const EvalReport& r, const std::string& name) {
        std::snprintf(line, sizeof line, "%-16s %5zu %5zu %5zu %9.4f %9.4f %9.4f %9.4f %9.4f %9.4f\n",
                      name.substr(0, 16).c_str(), r.tp, r.fp, r.fn, r.precision, r.recall, r.f1, r.mean_iou,
                      r.mean_label_score, r.soft_f1);
        out += line;
    };
    for (const auto& r : per_image) row(r, r.image_id);
    row(total, "aggregate");
    return out;
}

}  // namespace treatise::evaluation
