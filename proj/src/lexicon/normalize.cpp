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
#include "treatise/lexicon/normalize.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace treatise::lexicon {

namespace {

const icu::Normalizer2& nfkd() {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFKDInstance(status);
    if (U_FAILURE(status) || n == nullptr) throw std::runtime_error("ICU NFKD normalizer unavailable");
    return *n;
}

bool is_mark(UChar32 c) {
    const auto mask = U_GET_GC_MASK(c);
    return (mask & U_GC_M_MASK) != 0;
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Folded code points of `text` (NFKD, marks stripped, lowercased).
icu::UnicodeString fold_units(std::string_view text) {
    const icu::UnicodeString source =
        icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    UErrorCode status = U_ZERO_ERROR;
    const icu::UnicodeString decomposed = nfkd().normalize(source, status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
    icu::UnicodeString out;
    for (int32_t i = 0; i < decomposed.length();) {
        const UChar32 c = decomposed.char32At(i);
        i += U16_LENGTH(c);
        if (is_mark(c)) continue;
        out.append(u_tolower(c));
    }
    return out;
}

std::string to_utf8(const icu::UnicodeString& s) {
    std::string out;
    s.toUTF8String(out);
    return out;
}

}  // namespace

std::string fold(std::string_view text) {
    const icu::UnicodeString folded = fold_units(text);
    icu::UnicodeString out;
    bool pending_space = false;
    for (int32_t i = 0; i < folded.length();) {
        const UChar32 c = folded.char32At(i);
        i += U16_LENGTH(c);
        if (u_isUWhiteSpace(c)) {
            pending_space = !out.isEmpty();
            continue;
        }
        if (pending_space) out.append(static_cast<UChar>(' '));
        pending_space = false;
        out.append(c);
    }
    return to_utf8(out);
}

std::string strip_plural(std::string_view word) {
    const std::size_t letters = codepoint_count(word);
    if (ends_with(word, "es") && letters >= 5) {
        const std::string_view stem = word.substr(0, word.size() - 2);
        if (ends_with(stem, "x") || ends_with(stem, "z") || ends_with(stem, "ch") || ends_with(stem, "sh") ||
            ends_with(stem, "ss")) {
            return std::string(stem);
        }
    }
    if (ends_with(word, "s") && !ends_with(word, "ss") && letters >= 4) {
        return std::string(word.substr(0, word.size() - 1));
    }
    return std::string(word);
}

std::string normalize_term(std::string_view text) {
    const std::string folded = fold(text);
    std::string out;
    std::size_t start = 0;
    while (start < folded.size()) {
        std::size_t end = folded.find(' ', start);
        if (end == std::string::npos) end = folded.size();
        if (!out.empty()) out += ' ';
        out += strip_plural(std::string_view(folded).substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    const icu::UnicodeString folded = fold_units(text);
    std::vector<std::string> tokens;
    icu::UnicodeString current;
    auto flush = [&] {
        if (!current.isEmpty()) {
            tokens.push_back(strip_plural(to_utf8(current)));
            current.remove();
        }
    };
    for (int32_t i = 0; i < folded.length();) {
        const UChar32 c = folded.char32At(i);
        i += U16_LENGTH(c);
        if (u_isalpha(c)) {
            current.append(c);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

}  // namespace treatise::lexicon
