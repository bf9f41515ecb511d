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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treatise/catalog/record.hpp"
#include "treatise/lexicon/glossary.hpp"
#include "treatise/ontology/ontology.hpp"

namespace treatise::evaluation {

struct ScoreParams {
    double iou_threshold = 0.5;
    double c_ancestor = 0.5;
    double c_related = 0.25;
};

/// One box with its top-confidence label.
struct EvalItem {
    catalog::BoundingBox box;
    std::string text;
    std::optional<std::string> concept_id;
    double confidence = 1.0;
};

/// Segments with at least one assignment, ascending segment id; the label is the
/// highest-confidence assignment (first listed on ties).
std::vector<EvalItem> items_of(const catalog::ImageRecord& record);

/// Copy whose assignments are all marked human.
catalog::ImageRecord as_ground_truth(catalog::ImageRecord record);
/// Reads a truth sidecar and requires every assignment to be human.
catalog::ImageRecord load_ground_truth(const std::filesystem::path& path);

struct Match {
    std::size_t pred = 0;
    std::size_t truth = 0;
    double iou = 0.0;
    friend bool operator==(const Match&, const Match&) = default;
};

/// Greedy one-to-one matching: predictions by descending confidence (input order
/// on ties), each to the unmatched truth of largest IoU >= threshold (lower
/// index on ties). Returned in processing order.
std::vector<Match> match_detections(const std::vector<EvalItem>& predicted, const std::vector<EvalItem>& truth,
                                    double iou_threshold = 0.5);

/// Concepts a label resolves to: its concept id, glossary-linked concepts, and
/// concepts whose id or label normalizes like the text.
std::vector<std::string> resolve_concepts(const std::string& text, const std::optional<std::string>& concept_id,
                                          const lexicon::Glossary& glossary, const ontology::Ontology& ontology);

double label_score(const EvalItem& a, const EvalItem& b, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, const ScoreParams& params = {});
double label_score(const std::string& a, const std::string& b, const lexicon::Glossary& glossary,
                   const ontology::Ontology& ontology, const ScoreParams& params = {});

struct EvalReport {
    std::string image_id;
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    double sum_iou = 0.0;
    double sum_label_score = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double mean_iou = 0.0;
    double mean_label_score = 0.0;
    double soft_f1 = 0.0;
};

/// Recomputes the ratios from the raw counts and sums; 0/0 is 0.
void finalize(EvalReport& report);

EvalReport evaluate(const catalog::ImageRecord& predicted, const catalog::ImageRecord& truth,
                    const lexicon::Glossary& glossary, const ontology::Ontology& ontology,
                    const ScoreParams& params = {});

enum class Averaging { micro, macro };

/// Micro pools counts and sums; macro averages the per-image ratios.
EvalReport aggregate(const std::vector<EvalReport>& reports, Averaging averaging = Averaging::micro);

nlohmann::json report_to_json(const EvalReport& report);
nlohmann::json reports_to_json(const std::vector<EvalReport>& per_image, const EvalReport& total);
std::string render_table(const std::vector<EvalReport>& per_image, const EvalReport& total);

}  // namespace treatise::evaluation
