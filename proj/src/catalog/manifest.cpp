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
#include "treatise/catalog/manifest.hpp"

#include "treatise/common/files.hpp"
#include "treatise/common/json_schema.hpp"

namespace treatise::catalog {

using namespace json_schema;

std::size_t CorpusManifest::total_images() const {
    std::size_t n = 0;
    for (const auto& t : treatises) n += t.images.size();
    return n;
}

CorpusManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
    const json doc = json_schema::parse(text, "manifest");
    CorpusManifest m;
    if (const json* range = optional_member(as_object(doc, "/"), "year_range")) {
        as_array(*range, "/year_range");
        if (range->size() != 2) throw SchemaError("/year_range", "expected [min, max]");
        m.year_min = static_cast<int>(as_integer((*range)[0], "/year_range/0"));
        m.year_max = static_cast<int>(as_integer((*range)[1], "/year_range/1"));
        if (m.year_min > m.year_max) throw SchemaError("/year_range", "min exceeds max");
    }
    const json& treatises = as_array(member(doc, "treatises", ""), "/treatises");
    for (std::size_t i = 0; i < treatises.size(); ++i) {
        const std::string path = "/treatises/" + std::to_string(i);
        const json& t = treatises[i];
        Treatise out;
        out.title = as_string(member(t, "title", path), path + "/title");
        out.language = as_string(member(t, "language", path), path + "/language");
        out.year = static_cast<int>(as_integer(member(t, "year", path), path + "/year"));
        if (out.year < m.year_min || out.year > m.year_max) {
            throw SchemaError(path + "/year", "year " + std::to_string(out.year) + " outside " +
                                                  std::to_string(m.year_min) + ".." + std::to_string(m.year_max));
        }
        const json& images = as_array(member(t, "images", path), path + "/images");
        for (std::size_t j = 0; j < images.size(); ++j) {
            std::filesystem::path p = as_string(images[j], path + "/images/" + std::to_string(j));
            out.images.push_back(p.is_absolute() ? p : base_dir / p);
        }
        m.treatises.push_back(std::move(out));
    }
    return m;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
    return parse_manifest(read_file_text(path), path.parent_path());
}

}  // namespace treatise::catalog
