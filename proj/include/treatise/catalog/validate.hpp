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
#include <span>
#include <string>
#include <vector>

#include "treatise/catalog/record.hpp"
#include "treatise/common/error.hpp"

namespace treatise::catalog {

struct Violation {
    std::string path;  // JSON pointer, e.g. "/segments/0/bbox"
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every violated invariant of the record and its nested values; empty means valid.
std::vector<Violation> validate_record(const ImageRecord& record);

/// True when record.image_id is the SHA-256 of `image_bytes`.
bool verify_image_id(const ImageRecord& record, std::span<const std::uint8_t> image_bytes);

class ValidationError : public SchemaError {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Throws ValidationError if validate_record reports anything.
void ensure_valid(const ImageRecord& record);

/// True for "YYYY-MM-DDTHH:MM:SS[.fff]Z".
bool is_utc_timestamp(const std::string& text);

}  // namespace treatise::catalog
