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
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace treatise::lexicon {

/// Normalized stopword list for one language.
class Stopwords {
public:
    Stopwords() = default;
    /// One token per line; blank lines and lines starting with '#' are ignored.
    static Stopwords parse(std::string_view text);
    static Stopwords load(const std::filesystem::path& path);

    bool contains(const std::string& normalized_token) const { return words_.contains(normalized_token); }
    std::size_t size() const { return words_.size(); }

private:
    std::set<std::string> words_;
};

/// Loads every "stopwords_<lang>.txt" in `dir`, keyed by language code.
std::map<std::string, Stopwords> load_stopword_dir(const std::filesystem::path& dir);

}  // namespace treatise::lexicon
