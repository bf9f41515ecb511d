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
#include "treatise/cli/cli_config.hpp"

#include "treatise/common/files.hpp"
#include "treatise/common/json_schema.hpp"
#include "treatise/lexicon/glossary.hpp"
#include "treatise/lexicon/stopwords.hpp"
#include "treatise/ontology/ontology.hpp"

namespace treatise::cli {

using namespace json_schema;
namespace fs = std::filesystem;

namespace {

std::optional<fs::path> path_member(const json& doc, const std::string& key, const fs::path& base, bool must_exist) {
    const json* v = optional_member(doc, key);
    if (!v) return std::nullopt;
    fs::path p = as_string(*v, "/" + key);
    if (p.is_relative()) p = base / p;
    if (must_exist && !fs::exists(p)) throw SchemaError("/" + key, "file does not exist: " + p.string());
    return p;
}

}  // namespace

CliConfig parse_cli_config(std::string_view text, const fs::path& base_dir) {
    const json doc = json_schema::parse(text, "config");
    as_object(doc, "/");
    CliConfig c;
    c.glossary = path_member(doc, "glossary", base_dir, true);
    c.ontology = path_member(doc, "ontology", base_dir, true);
    c.manifest = path_member(doc, "manifest", base_dir, true);
    c.stopwords = path_member(doc, "stopwords", base_dir, true);
    c.fixtures = path_member(doc, "fixtures", base_dir, true);
    c.index = path_member(doc, "index", base_dir, false);

    auto& p = c.pipeline;
    p.vocabulary_path = path_member(doc, "vocabulary", base_dir, false);
    p.term_list_path = path_member(doc, "term_list", base_dir, true);
    if (const json* v = optional_member(doc, "method")) p.method = catalog::method_from_string(as_string(*v, "/method"));
    if (const json* v = optional_member(doc, "segmentation_stage")) {
        p.segmentation_stage = pipeline::segmentation_stage_from_string(as_string(*v, "/segmentation_stage"));
    }
    if (const json* v = optional_member(doc, "max_tags")) {
        const auto n = as_integer(*v, "/max_tags");
        if (n < 1) throw SchemaError("/max_tags", "must be positive");
        p.max_tags = static_cast<std::size_t>(n);
    }
    if (const json* v = optional_member(doc, "timeout_ms")) {
        const auto n = as_integer(*v, "/timeout_ms");
        if (n < 1) throw SchemaError("/timeout_ms", "must be positive");
        p.retry.timeout = std::chrono::milliseconds(n);
    }
    if (const json* v = optional_member(doc, "language")) p.language = as_string(*v, "/language");
    if (const json* v = optional_member(doc, "relief")) p.relief = pipeline::relief_from_string(as_string(*v, "/relief"));
    if (const json* v = optional_member(doc, "hmin")) p.hmin = static_cast<int>(as_integer(*v, "/hmin"));
    if (const json* eps = optional_member(doc, "endpoints")) {
        for (const auto& [stage, url] : as_object(*eps, "/endpoints").items()) {
            const std::string path = "/endpoints/" + stage;
            const std::string u = as_string(url, path);
            if (!pipeline::is_valid_url(u)) throw SchemaError(path, "not a valid URL: " + u);
            p.endpoints[pipeline::stage_from_string(stage)] = u;
        }
    }
    pipeline::apply_env_overrides(p);
    return c;
}

CliConfig load_cli_config(const fs::path& path) {
    return parse_cli_config(read_file_text(path), path.has_parent_path() ? path.parent_path() : fs::path("."));
}

pipeline::Knowledge load_knowledge(const CliConfig& config) {
    pipeline::Knowledge k;
    if (config.glossary) k.glossary = lexicon::load_glossary(*config.glossary);
    if (config.ontology) k.ontology = ontology::load_ontology(*config.ontology);
    if (config.stopwords) {
        if (fs::is_directory(*config.stopwords)) {
            auto all = lexicon::load_stopword_dir(*config.stopwords);
            if (const auto it = all.find(config.pipeline.language); it != all.end()) k.stopwords = it->second;
        } else {
            k.stopwords = lexicon::Stopwords::load(*config.stopwords);
        }
    }
    return k;
}

}  // namespace treatise::cli
