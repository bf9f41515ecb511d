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
#include "treatise/retrieval/index.hpp"

#include <algorithm>
#include <cmath>

#include "treatise/common/error.hpp"
#include "treatise/common/files.hpp"
#include "treatise/common/json_schema.hpp"
#include "treatise/lexicon/normalize.hpp"

namespace treatise::retrieval {

using nlohmann::json;
using namespace json_schema;

namespace {

constexpr int kSnapshotVersion = 1;

void add_text(IndexDocument& doc, std::string_view text) {
    for (auto& token : text_tokens(text)) {
        ++doc.term_freq[std::move(token)];
        ++doc.length;
    }
}

void add_labels(IndexDocument& doc, const std::vector<catalog::LabelAssignment>& labels) {
    for (const auto& l : labels) {
        add_text(doc, l.text);
        if (l.definition) add_text(doc, *l.definition);
    }
}

}  // namespace

const char* to_string(Scope scope) {
    switch (scope) {
        case Scope::all: return "all";
        case Scope::images: return "images";
        case Scope::segments: return "segments";
    }
    return "all";
}

Scope scope_from_string(const std::string& name) {
    if (name == "all") return Scope::all;
    if (name == "images" || name == "image") return Scope::images;
    if (name == "segments" || name == "segment") return Scope::segments;
    throw Error(ErrorKind::usage, "unknown scope '" + name + "' (expected all, images or segments)");
}

std::vector<std::string> text_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& token : lexicon::tokenize(text)) {
        if (std::string n = lexicon::normalize_term(token); !n.empty()) out.push_back(std::move(n));
    }
    return out;
}

std::vector<IndexDocument> documents_for(const catalog::ImageRecord& record) {
    std::vector<IndexDocument> docs;
    IndexDocument image{record.image_id, record.image_id, std::nullopt, {}, 0};
    if (record.image_caption) add_text(image, *record.image_caption);
    for (const auto& [id, labels] : record.assignments) add_labels(image, labels);
    docs.push_back(std::move(image));

    std::vector<std::int32_t> ids;
    for (const auto& s : record.segments) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    for (std::int32_t id : ids) {
        IndexDocument seg{record.image_id + "#" + std::to_string(id), record.image_id, id, {}, 0};
        if (const auto it = record.assignments.find(id); it != record.assignments.end()) add_labels(seg, it->second);
        docs.push_back(std::move(seg));
    }
    return docs;
}

void Index::add(IndexDocument doc) {
    if (docs_.contains(doc.doc_id)) throw SchemaError("/documents/" + doc.doc_id, "duplicate document id");
    for (const auto& [token, tf] : doc.term_freq) postings_[token][doc.doc_id] = tf;
    by_image_[doc.image_id].insert(doc.doc_id);
    total_length_ += doc.length;
    docs_.emplace(doc.doc_id, std::move(doc));
}

void Index::remove_image(const std::string& image_id) {
    const auto it = by_image_.find(image_id);
    if (it == by_image_.end()) return;
    for (const auto& doc_id : it->second) {
        const IndexDocument& doc = docs_.at(doc_id);
        for (const auto& [token, tf] : doc.term_freq) {
            auto p = postings_.find(token);
            p->second.erase(doc_id);
            if (p->second.empty()) postings_.erase(p);
        }
        total_length_ -= doc.length;
        docs_.erase(doc_id);
    }
    by_image_.erase(it);
}

void Index::index_record(const catalog::ImageRecord& record) {
    auto docs = documents_for(record);
    remove_image(record.image_id);
    for (auto& d : docs) add(std::move(d));
}

double Index::average_length() const {
    return docs_.empty() ? 0.0 : static_cast<double>(total_length_) / static_cast<double>(docs_.size());
}

double Index::idf(const std::string& token) const {
    const auto it = postings_.find(token);
    const double n = it == postings_.end() ? 0.0 : static_cast<double>(it->second.size());
    const double big_n = static_cast<double>(docs_.size());
    return std::log((big_n - n + 0.5) / (n + 0.5) + 1.0);
}

double Index::bm25(const IndexDocument& doc, const std::set<std::string>& tokens) const {
    const double avgdl = average_length();
    const double norm = avgdl > 0.0 ? static_cast<double>(doc.length) / avgdl : 1.0;
    double score = 0.0;
    for (const auto& t : tokens) {
        const auto it = doc.term_freq.find(t);
        if (it == doc.term_freq.end()) continue;
        const double tf = it->second;
        score += idf(t) * tf * (kBm25K1 + 1.0) / (tf + kBm25K1 * (1.0 - kBm25B + kBm25B * norm));
    }
    return score;
}

std::vector<SearchHit> Index::search(const std::set<std::string>& terms, std::size_t k, Scope scope) const {
    std::set<std::string> tokens;
    for (const auto& t : terms) {
        for (auto& token : text_tokens(t)) tokens.insert(std::move(token));
    }
    std::set<std::string> candidates;
    for (const auto& t : tokens) {
        if (const auto it = postings_.find(t); it != postings_.end()) {
            for (const auto& [doc_id, tf] : it->second) candidates.insert(doc_id);
        }
    }
    std::vector<SearchHit> hits;
    for (const auto& doc_id : candidates) {
        const IndexDocument& doc = docs_.at(doc_id);
        if (scope == Scope::images && doc.segment_id) continue;
        if (scope == Scope::segments && !doc.segment_id) continue;
        hits.push_back({doc.doc_id, doc.image_id, doc.segment_id, bm25(doc, tokens)});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
    });
    if (hits.size() > k) hits.resize(k);
    return hits;
}

json Index::to_json() const {
    json documents = json::object();
    for (const auto& [id, d] : docs_) {
        json entry = {{"image_id", d.image_id}, {"length", d.length}, {"terms", d.term_freq}};
        if (d.segment_id) entry["segment_id"] = *d.segment_id;
        documents[id] = std::move(entry);
    }
    return {{"version", kSnapshotVersion},
            {"N", docs_.size()},
            {"documents", documents},
            {"postings", postings_}};
}

Index Index::from_json(const json& doc) {
    if (as_integer(member(doc, "version", ""), "/version") != kSnapshotVersion) {
        throw SchemaError("/version", "unsupported index snapshot version");
    }
    Index index;
    for (const auto& [id, body] : as_object(member(doc, "documents", ""), "/documents").items()) {
        const std::string path = "/documents/" + id;
        IndexDocument d;
        d.doc_id = id;
        d.image_id = as_string(member(body, "image_id", path), path + "/image_id");
        if (const json* s = optional_member(body, "segment_id")) {
            d.segment_id = static_cast<std::int32_t>(as_integer(*s, path + "/segment_id"));
        }
        const std::string expected = d.segment_id ? d.image_id + "#" + std::to_string(*d.segment_id) : d.image_id;
        if (id != expected) throw SchemaError(path, "document id does not match image and segment");
        for (const auto& [token, tf] : as_object(member(body, "terms", path), path + "/terms").items()) {
            const auto n = as_integer(tf, path + "/terms/" + token);
            if (n < 1) throw SchemaError(path + "/terms/" + token, "term frequency must be positive");
            d.term_freq[token] = static_cast<std::uint32_t>(n);
            d.length += static_cast<std::uint32_t>(n);
        }
        if (as_integer(member(body, "length", path), path + "/length") != d.length) {
            throw SchemaError(path + "/length", "length disagrees with term frequencies");
        }
        index.add(std::move(d));
    }
    if (static_cast<std::size_t>(as_integer(member(doc, "N", ""), "/N")) != index.size()) {
        throw SchemaError("/N", "document count disagrees with the document table");
    }
    if (const json* p = optional_member(doc, "postings"); p && *p != json(index.postings_)) {
        throw SchemaError("/postings", "postings disagree with the document table");
    }
    return index;
}

void Index::save(const std::filesystem::path& path) const { write_file_atomic(path, to_json().dump()); }

Index Index::load(const std::filesystem::path& path) {
    return from_json(json_schema::parse(read_file_text(path), path.string()));
}

}  // namespace treatise::retrieval
