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

#include <string>
#include <string_view>
#include <vector>

#include "treatise/lexicon/stopwords.hpp"

namespace treatise::pipeline {

inline constexpr std::string_view kDefaultDomainContext = "shipbuilding or nautical";

/// `In a <domain_context> context, define "<term>".` Throws std::invalid_argument on an empty term.
std::string build_definition_prompt(std::string_view term, std::string_view domain_context = kDefaultDomainContext);

/// Recovers the term from a prompt built by build_definition_prompt; returns
/// the whole prompt when it does not follow the template.
std::string term_from_definition_prompt(std::string_view prompt);

/// Caption -> one-word tags: tokenize, normalize, drop stopwords, keep the
/// first occurrence of each tag, truncate to max_tags.
std::vector<std::string> derive_tags_from_caption(std::string_view caption, std::size_t max_tags,
                                                  const lexicon::Stopwords& stopwords);

}  // namespace treatise::pipeline
