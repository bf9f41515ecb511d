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
#include "treatise/pipeline/run.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "treatise/catalog/geometry.hpp"
#include "treatise/catalog/validate.hpp"
#include "treatise/common/files.hpp"
#include "treatise/common/hash.hpp"
#include "treatise/lexicon/normalize.hpp"
#include "treatise/pipeline/enrich.hpp"
#include "treatise/pipeline/prompts.hpp"
#include "treatise/pipeline/vocabulary.hpp"
#include "treatise/raster/gradient.hpp"
#include "treatise/raster/markers.hpp"
#include "treatise/raster/pgm.hpp"
#include "treatise/raster/watershed.hpp"

namespace treatise::pipeline {

using catalog::ImageRecord;
using catalog::LabelAssignment;
using catalog::LabelSource;
using nlohmann::json;

std::vector<std::string> parse_term_list(std::string_view text) {
    std::vector<std::string> terms;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string term = lexicon::normalize_term(line);
        if (!term.empty() && seen.insert(term).second) terms.push_back(std::move(term));
    }
    return terms;
}

std::vector<std::string> load_term_list(const std::filesystem::path& path) {
    return parse_term_list(read_file_text(path));
}

VocabularySeed ensure_vocabulary(const PipelineConfig& config, const lexicon::Glossary& glossary) {
    if (!config.vocabulary_path) throw Error(ErrorKind::usage, "method requires a vocabulary path");
    const auto& path = *config.vocabulary_path;
    if (std::filesystem::exists(path)) return load_seed(path);
    const auto it = config.endpoints.find(Stage::define);
    if (it == config.endpoints.end()) throw BackendError(Stage::define, "vocabulary missing and no definer configured");
    const BackendClient definer(Stage::define, it->second, config.retry);
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    VocabularySeed built = build_label_vocabulary(glossary, definer, config.language, dir);
    save_seed(built, path);
    return built;
}

catalog::ImageRecord segment_native(std::span<const std::uint8_t> image_bytes, const std::string& source_path,
                                    Relief relief, int hmin) {
    const raster::ImageGrid grid = raster::decode_pgm(image_bytes);
    const raster::ImageGrid surface = relief == Relief::gradient ? raster::gradient_magnitude(grid) : grid;
    const auto markers = raster::regional_minima_markers(surface, hmin);
    ImageRecord record;
    record.image_id = sha256_hex(image_bytes);
    record.source_path = source_path;
    record.width = grid.width();
    record.height = grid.height();
    record.segments = raster::extract_segments(raster::watershed(surface, markers));
    record.provenance.method = catalog::Method::native;
    record.provenance.stages = {"watershed"};
    return record;
}

namespace {

struct Labeled {
    std::string text;
    double confidence;
    LabelSource source;
    catalog::BoundingBox bbox;
};

class Run {
public:
    Run(std::span<const std::uint8_t> bytes, const PipelineConfig& config, const Knowledge& knowledge)
        : bytes_(bytes), config_(config), knowledge_(knowledge), grid_(raster::decode_pgm(bytes)) {}

    ImageRecord execute(const std::string& source_path) {
        record_.image_id = sha256_hex(bytes_);
        record_.source_path = source_path;
        record_.width = grid_.width();
        record_.height = grid_.height();
        record_.provenance.method = config_.method;

        if (config_.segmentation_stage == SegmentationStage::before_labeling) {
            segment();
            label();
        } else {
            label();
            segment();
        }
        attach();
        record_.provenance.stages.push_back("attach");
        enrich_record(record_, knowledge_.glossary, knowledge_.ontology, config_.language);
        return std::move(record_);
    }

private:
    json call(Stage stage, const json& request) {
        const auto it = config_.endpoints.find(stage);
        if (it == config_.endpoints.end()) throw BackendError(stage, "no endpoint configured");
        const std::string body = wire::body(request);
        const BackendClient client(stage, it->second, config_.retry);
        const BackendReply reply = client.post(body);
        record_.provenance.prompt_hashes.push_back(sha256_hex(body));
        record_.provenance.backend_ids[to_string(stage)] = reply.backend_id;
        record_.provenance.stages.emplace_back(to_string(stage));
        return reply.body;
    }

    void segment() {
        const json doc = call(Stage::segment, wire::image_request(bytes_));
        std::int32_t id = 1;
        for (const auto& ws : wire::parse_segment_response(doc, grid_.width(), grid_.height())) {
            record_.segments.push_back(
                raster::segment_from_mask(id++, raster::MaskRLE{grid_.width(), grid_.height(), ws.counts}));
        }
    }

    std::vector<std::string> capped(std::vector<std::string> tags) const {
        if (tags.size() > config_.max_tags) tags.resize(config_.max_tags);
        return tags;
    }

    void ground(const std::vector<std::string>& tags, LabelSource source, const std::set<std::string>* vocabulary) {
        if (tags.empty()) return;
        const json doc = call(Stage::ground, wire::ground_request(bytes_, tags));
        for (auto& d : wire::parse_ground_response(doc, grid_.width(), grid_.height())) {
            std::string text = lexicon::normalize_term(d.text);
            if (vocabulary && !vocabulary->contains(text)) continue;
            if (text.empty()) continue;
            labeled_.push_back({std::move(text), d.confidence, source, d.bbox});
        }
    }

    std::vector<std::string> tag_closed(const std::vector<std::string>& vocabulary) {
        const std::set<std::string> allowed(vocabulary.begin(), vocabulary.end());
        const json doc = call(Stage::tag, wire::tag_request(bytes_, vocabulary));
        std::vector<std::string> tags;
        std::set<std::string> seen;
        for (const auto& t : wire::parse_tag_response(doc)) {
            std::string text = lexicon::normalize_term(t.text);
            if (allowed.contains(text) && seen.insert(text).second) tags.push_back(std::move(text));
        }
        return capped(std::move(tags));
    }

    VocabularySeed seed() { return ensure_vocabulary(config_, knowledge_.glossary); }

    void label() {
        switch (config_.method) {
            case catalog::Method::m1: {
                const json doc = call(Stage::caption, wire::image_request(bytes_));
                const std::string caption = wire::parse_caption_response(doc);
                record_.image_caption = caption;
                ground(derive_tags_from_caption(caption, config_.max_tags, knowledge_.stopwords),
                       LabelSource::caption_derived, nullptr);
                break;
            }
            case catalog::Method::m2:
            case catalog::Method::m3: {
                if (!config_.term_list_path) throw Error(ErrorKind::usage, "method requires a term list");
                const auto vocabulary = load_term_list(*config_.term_list_path);
                const std::set<std::string> allowed(vocabulary.begin(), vocabulary.end());
                ground(tag_closed(vocabulary), LabelSource::tagger, &allowed);
                break;
            }
            case catalog::Method::m4: {
                const VocabularySeed s = seed();
                add_prompt_hashes(s);
                const auto terms = s.terms();
                const std::set<std::string> allowed(terms.begin(), terms.end());
                ground(tag_closed(terms), LabelSource::tagger, &allowed);
                break;
            }
            case catalog::Method::m4b: {
                const VocabularySeed s = seed();
                add_prompt_hashes(s);
                record_.provenance.degraded = true;
                std::map<std::string, std::string> term_of;
                std::vector<std::string> definitions;
                for (const auto& [term, def] : s.entries) {
                    if (term_of.emplace(def, term).second) definitions.push_back(def);
                }
                definitions = capped(std::move(definitions));
                if (definitions.empty()) break;
                const json doc = call(Stage::ground, wire::ground_request(bytes_, definitions));
                for (auto& d : wire::parse_ground_response(doc, grid_.width(), grid_.height())) {
                    const auto hit = term_of.find(d.text);
                    if (hit == term_of.end()) continue;
                    labeled_.push_back({hit->second, d.confidence, LabelSource::llm, d.bbox});
                }
                break;
            }
            case catalog::Method::native:
                break;
        }
    }

    void add_prompt_hashes(const VocabularySeed& s) {
        for (auto& h : s.prompt_hashes()) record_.provenance.prompt_hashes.push_back(std::move(h));
    }

    void attach() {
        for (const auto& l : labeled_) {
            std::int32_t best_id = 0;
            double best_iou = 0.0;
            for (const auto& seg : record_.segments) {
                const double iou = catalog::box_iou(seg.bbox, l.bbox);
                if (iou > best_iou) {
                    best_iou = iou;
                    best_id = seg.id;
                }
            }
            if (best_id == 0) {
                std::vector<std::size_t> idx;
                for (int y = l.bbox.y; y < l.bbox.y + l.bbox.h; ++y) {
                    for (int x = l.bbox.x; x < l.bbox.x + l.bbox.w; ++x) {
                        idx.push_back(static_cast<std::size_t>(y) * static_cast<std::size_t>(grid_.width()) +
                                      static_cast<std::size_t>(x));
                    }
                }
                std::int32_t next = 1;
                for (const auto& seg : record_.segments) next = std::max(next, seg.id + 1);
                record_.segments.push_back(
                    raster::segment_from_mask(next, raster::rle_from_indices(idx, grid_.width(), grid_.height())));
                best_id = next;
            }
            record_.assignments[best_id].push_back({l.text, l.confidence, l.source, std::nullopt, std::nullopt});
        }
    }

    std::span<const std::uint8_t> bytes_;
    const PipelineConfig& config_;
    const Knowledge& knowledge_;
    raster::ImageGrid grid_;
    ImageRecord record_;
    std::vector<Labeled> labeled_;
};

}  // namespace

catalog::ImageRecord run_pipeline(std::span<const std::uint8_t> image_bytes, const std::string& source_path,
                                  const PipelineConfig& config, const Knowledge& knowledge) {
    config.validate();
    ImageRecord record;
    if (config.method == catalog::Method::native) {
        record = segment_native(image_bytes, source_path, config.relief, config.hmin);
    } else {
        record = Run(image_bytes, config, knowledge).execute(source_path);
    }
    record.provenance.timestamp = config.fixed_timestamp.value_or(catalog::utc_timestamp());
    catalog::ensure_valid(record);
    return record;
}

}  // namespace treatise::pipeline
