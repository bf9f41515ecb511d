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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace treatise::catalog {

struct Treatise {
    std::string title;
    std::string language;  // BCP-47 primary subtag
    int year = 0;
    std::vector<std::filesystem::path> images;
};

struct CorpusManifest {
    std::vector<Treatise> treatises;
    int year_min = 1550;
    int year_max = 1813;

    std::size_t total_images() const;
};

/// Parses {"treatises": [{title, language, year, images[]}], "year_range"?: [min, max]}.
/// Relative image paths resolve against `base_dir`. Throws SchemaError on
/// missing fields or years outside the declared range.
CorpusManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);
CorpusManifest load_manifest(const std::filesystem::path& path);

}  // namespace treatise::catalog
