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
#include "treatise/pipeline/prompts.hpp"

#include <regex>
#include <set>

#include "treatise/common/error.hpp"
#include "treatise/lexicon/normalize.hpp"

namespace treatise::pipeline {

std::string build_definition_prompt(std::string_view term, std::string_view domain_context) {
    if (term.empty()) throw Error(ErrorKind::usage, "definition prompt needs a non-empty term");
    std::string prompt = "In a ";
    prompt += domain_context;
    prompt += " context, define \"";
    prompt += term;
    prompt += "\".";
    return prompt;
}

std::string term_from_definition_prompt(std::string_view prompt) {
    static const std::regex pattern(R"re(^In a .* context, define "(.*)"\.$)re");
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_match(prompt.begin(), prompt.end(), m, pattern)) return m[1].str();
    return std::string(prompt);
}

std::vector<std::string> derive_tags_from_caption(std::string_view caption, std::size_t max_tags,
                                                  const lexicon::Stopwords& stopwords) {
    std::vector<std::string> tags;
    std::set<std::string> seen;
    for (auto& token : lexicon::tokenize(caption)) {
        if (tags.size() >= max_tags) break;
        if (stopwords.contains(token)) continue;
        if (seen.insert(token).second) tags.push_back(std::move(token));
    }
    return tags;
}

}  // namespace treatise::pipeline
