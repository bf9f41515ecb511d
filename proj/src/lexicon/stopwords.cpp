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
#include "treatise/lexicon/stopwords.hpp"

#include <fstream>
#include <sstream>

#include "treatise/common/error.hpp"
#include "treatise/lexicon/normalize.hpp"

namespace treatise::lexicon {

Stopwords Stopwords::parse(std::string_view text) {
    Stopwords s;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string token = normalize_term(line);
        if (!token.empty()) s.words_.insert(std::move(token));
    }
    return s;
}

Stopwords Stopwords::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open stopword list " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::map<std::string, Stopwords> load_stopword_dir(const std::filesystem::path& dir) {
    std::map<std::string, Stopwords> out;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        const std::string name = entry.path().filename().string();
        constexpr std::string_view prefix = "stopwords_";
        constexpr std::string_view suffix = ".txt";
        if (name.size() <= prefix.size() + suffix.size() || !name.starts_with(prefix) || !name.ends_with(suffix)) {
            continue;
        }
        const std::string lang = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
        out[lang] = Stopwords::load(entry.path());
    }
    if (ec) throw IoError("cannot list stopword directory " + dir.string());
    return out;
}

}  // namespace treatise::lexicon
