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

namespace treatise::lexicon {

/// Unicode NFKD, combining marks removed, lowercased; whitespace collapsed to
/// single spaces and trimmed. No plural handling.
std::string fold(std::string_view text);

/// Rule-based plural strip for one folded word: "es" after x, z, ch, sh or ss,
/// otherwise a single trailing "s" (never after "ss"); the result keeps at
/// least three letters or the word is returned unchanged.
std::string strip_plural(std::string_view word);

/// fold() followed by strip_plural() on every space-separated word.
/// Idempotent. Empty input yields an empty string.
std::string normalize_term(std::string_view text);

/// Folds `text`, splits it on non-letter code points and normalizes each
/// piece. Empty pieces are dropped; order and duplicates are kept.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace treatise::lexicon
