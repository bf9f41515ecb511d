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
#include "treatise/raster/pgm.hpp"

#include <cctype>

namespace treatise::raster {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long read_number(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            throw PgmError(PgmErrorCode::malformed_header, std::string("expected ") + what);
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > (1L << 30)) {
                throw PgmError(PgmErrorCode::malformed_header, std::string(what) + " out of range");
            }
            ++pos_;
        }
        return value;
    }

    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }
    bool at_space() const { return pos_ < bytes_.size() && std::isspace(bytes_[pos_]); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

ImageGrid decode_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        throw PgmError(PgmErrorCode::malformed_header, "missing P5 magic");
    }
    HeaderReader reader(bytes.subspan(2));
    if (!reader.at_space() && bytes.size() > 2 && bytes[2] != '#') {
        throw PgmError(PgmErrorCode::malformed_header, "missing P5 magic");
    }
    const long width = reader.read_number("width");
    const long height = reader.read_number("height");
    const long maxval = reader.read_number("maxval");
    if (width < 1 || height < 1) {
        throw PgmError(PgmErrorCode::malformed_header, "dimensions must be positive");
    }
    if (maxval < 1) {
        throw PgmError(PgmErrorCode::malformed_header, "maxval must be positive");
    }
    if (maxval > 255) {
        throw PgmError(PgmErrorCode::maxval_too_large, "maxval " + std::to_string(maxval) + " exceeds 255");
    }
    // Exactly one whitespace byte separates the header from the raster.
    if (!reader.at_space()) {
        throw PgmError(PgmErrorCode::malformed_header, "missing separator after maxval");
    }
    reader.advance();

    const std::size_t offset = 2 + reader.pos();
    const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - offset < need) {
        throw PgmError(PgmErrorCode::truncated_payload, "expected " + std::to_string(need) + " pixel bytes, got " +
                                                            std::to_string(bytes.size() - offset));
    }
    std::vector<std::uint8_t> data(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                                   bytes.begin() + static_cast<std::ptrdiff_t>(offset + need));
    return ImageGrid(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

std::vector<std::uint8_t> encode_pgm(const ImageGrid& grid) {
    const std::string header =
        "P5\n" + std::to_string(grid.width()) + " " + std::to_string(grid.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), grid.pixels().begin(), grid.pixels().end());
    return out;
}

}  // namespace treatise::raster
