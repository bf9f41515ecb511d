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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "treatise/catalog/record.hpp"

namespace treatise::retrieval {

inline constexpr double kBm25K1 = 1.2;
inline constexpr double kBm25B = 0.75;

struct IndexDocument {
    std::string doc_id;  // image_id, or image_id#segment_id
    std::string image_id;
    std::optional<std::int32_t> segment_id;
    std::map<std::string, std::uint32_t> term_freq;
    std::uint32_t length = 0;

    friend bool operator==(const IndexDocument&, const IndexDocument&) = default;
};

enum class Scope { all, images, segments };

const char* to_string(Scope scope);
Scope scope_from_string(const std::string& name);

struct SearchHit {
    std::string doc_id;
    std::string image_id;
    std::optional<std::int32_t> segment_id;
    double score = 0.0;
};

/// Normalized tokens of a free text; each is stable under normalize_term.
std::vector<std::string> text_tokens(std::string_view text);

/// The image document followed by one document per segment, ascending id.
std::vector<IndexDocument> documents_for(const catalog::ImageRecord& record);

/// In-memory BM25 index. Not internally synchronized: const members may run
/// concurrently, mutation needs exclusive access.
class Index {
public:
    /// Replaces every document previously indexed for the record's image.
    void index_record(const catalog::ImageRecord& record);
    void remove_image(const std::string& image_id);

    /// OR semantics over the normalized tokens of the terms; BM25 score, ties by doc_id.
    std::vector<SearchHit> search(const std::set<std::string>& terms, std::size_t k, Scope scope = Scope::all) const;

    double idf(const std::string& token) const;
    double bm25(const IndexDocument& doc, const std::set<std::string>& tokens) const;

    const std::map<std::string, IndexDocument>& documents() const { return docs_; }
    const std::map<std::string, std::map<std::string, std::uint32_t>>& postings() const { return postings_; }
    std::size_t size() const { return docs_.size(); }
    double average_length() const;

    nlohmann::json to_json() const;
    static Index from_json(const nlohmann::json& doc);
    void save(const std::filesystem::path& path) const;
    static Index load(const std::filesystem::path& path);

    friend bool operator==(const Index& a, const Index& b) { return a.docs_ == b.docs_; }

private:
    void add(IndexDocument doc);

    std::map<std::string, IndexDocument> docs_;
    std::map<std::string, std::map<std::string, std::uint32_t>> postings_;  // token -> doc_id -> tf
    std::map<std::string, std::set<std::string>> by_image_;
    std::uint64_t total_length_ = 0;
};

}  // namespace treatise::retrieval
