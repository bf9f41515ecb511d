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

#include "treatise/common/error.hpp"
#include "treatise/raster/image.hpp"

namespace treatise::raster {

enum class PgmErrorCode { malformed_header, truncated_payload, maxval_too_large };

class PgmError : public ParseError {
public:
    PgmError(PgmErrorCode code, const std::string& what) : ParseError("pgm: " + what), code_(code) {}
    PgmErrorCode code() const noexcept { return code_; }

private:
    PgmErrorCode code_;
};

/// Decodes a binary (P5) portable graymap with maxval <= 255. Header comments
/// are accepted; trailing bytes after the payload are ignored.
ImageGrid decode_pgm(std::span<const std::uint8_t> bytes);

/// Encodes as "P5\n<w> <h>\n255\n" followed by the raw pixels.
std::vector<std::uint8_t> encode_pgm(const ImageGrid& grid);

}  // namespace treatise::raster
