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
#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "treatise/raster/gradient.hpp"
#include "treatise/raster/markers.hpp"
#include "treatise/raster/pgm.hpp"
#include "treatise/raster/rle.hpp"
#include "treatise/raster/segments.hpp"
#include "treatise/raster/watershed.hpp"

using namespace treatise;
using namespace treatise::raster;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& header, std::vector<std::uint8_t> payload) {
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

MarkerMap markers_from(int w, int h, std::vector<std::int32_t> labels) {
    MarkerMap m;
    m.width = w;
    m.height = h;
    m.labels = std::move(labels);
    return m;
}

PgmErrorCode pgm_error(const std::vector<std::uint8_t>& bytes) {
    try {
        decode_pgm(bytes);
    } catch (const PgmError& e) {
        return e.code();
    }
    FAIL("decode_pgm accepted malformed input");
    return PgmErrorCode::malformed_header;
}

}  // namespace

TEST_CASE("pgm decode") {
    const auto g = decode_pgm(bytes_of("P5 2 2 255\n", {0, 255, 0, 255}));
    CHECK(g.width() == 2);
    CHECK(g.height() == 2);
    CHECK(std::vector<std::uint8_t>(g.pixels().begin(), g.pixels().end()) == std::vector<std::uint8_t>{0, 255, 0, 255});

    const auto one = decode_pgm(bytes_of("P5\n# scanned plate\n1 1\n255\n", {7}));
    CHECK(one.at(0, 0) == 7);

    CHECK(pgm_error(bytes_of("P5 3 2 255\n", {1, 2, 3, 4, 5})) == PgmErrorCode::truncated_payload);
    CHECK(pgm_error(bytes_of("P5 1 1 65535\n", {0, 7})) == PgmErrorCode::maxval_too_large);
    CHECK(pgm_error(bytes_of("P2 1 1 255\n", {7})) == PgmErrorCode::malformed_header);
    CHECK(pgm_error(bytes_of("P5 0 1 255\n", {})) == PgmErrorCode::malformed_header);
}

TEST_CASE("pgm encode roundtrip") {
    gen::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto g = gen::grid(rng, gen::uniform(rng, 1, 9), gen::uniform(rng, 1, 9));
        CHECK(decode_pgm(encode_pgm(g)) == g);
    }
}

TEST_CASE("gradient of a constant grid is zero") {
    const auto out = gradient_magnitude(ImageGrid(7, 5, std::uint8_t{42}));
    for (auto v : out.pixels()) CHECK(v == 0);
}

TEST_CASE("single-row gradient is the central difference") {
    gen::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const int w = gen::uniform(rng, 1, 40);
        const auto g = gen::grid(rng, w, 1);
        const auto out = gradient_magnitude(g);
        for (int x = 0; x < w; ++x) {
            const int l = g.at(std::max(0, x - 1), 0), r = g.at(std::min(w - 1, x + 1), 0);
            CHECK(out.at(x, 0) == std::abs(r - l));
        }
    }
}

TEST_CASE("gradient matches the convolution oracle for every kernel") {
    gen::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto g = gen::grid(rng, gen::uniform(rng, 1, 40), gen::uniform(rng, 1, 12));
        const auto expected = oracle::sobel(g);
        for (KernelIsa isa : available_isas()) {
            const auto out = gradient_magnitude(g, isa);
            CHECK_MESSAGE(std::equal(expected.begin(), expected.end(), out.pixels().begin()), to_string(isa));
        }
    }
}

TEST_CASE("markers on simple grids") {
    const auto flat = regional_minima_markers(ImageGrid(4, 3, std::uint8_t{9}), 0);
    CHECK(flat.count() == 1);
    for (auto l : flat.labels) CHECK(l == 1);

    const auto ridge = regional_minima_markers(ImageGrid(5, 1, {1, 2, 5, 2, 1}), 0);
    CHECK(ridge.labels == std::vector<std::int32_t>{1, 0, 0, 0, 2});
}

TEST_CASE("markers equal plateau enumeration at h = 0") {
    gen::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto g = gen::grid(rng, 8, 8, gen::coin(rng) ? 255 : 4);
        std::vector<int> relief(g.pixels().begin(), g.pixels().end());
        CHECK(regional_minima_markers(g, 0).labels == oracle::regional_minima(relief, 8, 8));
    }
}

TEST_CASE("markers equal iterated h-minima reconstruction") {
    gen::Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const int w = gen::uniform(rng, 1, 9), h = gen::uniform(rng, 1, 9);
        const auto g = gen::grid(rng, w, h, 40);
        const int hmin = gen::uniform(rng, 0, 12);
        CHECK(regional_minima_markers(g, hmin).labels == oracle::regional_minima(oracle::hminima(g, hmin), w, h));
    }
}

TEST_CASE("watershed examples") {
    const auto basin = watershed(ImageGrid(3, 3, std::uint8_t{5}), markers_from(3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0}));
    for (auto l : basin.labels) CHECK(l == 1);

    const auto ridge = watershed(ImageGrid(5, 1, {1, 2, 5, 2, 1}), markers_from(5, 1, {1, 0, 0, 0, 2}));
    CHECK(ridge.labels == std::vector<std::int32_t>{1, 1, 0, 2, 2});

    CHECK_THROWS_AS(watershed(ImageGrid(2, 2, std::uint8_t{0}), markers_from(2, 2, {0, 0, 0, 0})), SchemaError);
    CHECK_THROWS_AS(watershed(ImageGrid(2, 2, std::uint8_t{0}), markers_from(3, 1, {1, 0, 0})), SchemaError);
}

TEST_CASE("watershed equals the immersion oracle") {
    gen::Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const int w = gen::uniform(rng, 1, 10), h = gen::uniform(rng, 1, 10);
        const auto g = gen::grid(rng, w, h, gen::coin(rng) ? 255 : 5);
        const auto m = gen::coin(rng) ? regional_minima_markers(g, gen::uniform(rng, 0, 3)) : gen::markers(rng, w, h, 6);
        CHECK(watershed(g, m).labels == oracle::watershed(g, m.labels));
    }
}

TEST_CASE("watershed relabeling and intensity shift invariance") {
    gen::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const auto g = gen::grid(rng, 8, 8, 200);
        const auto m = gen::markers(rng, 8, 8, 6);
        const auto base = watershed(g, m);

        // Reverse the label ids.
        const std::int32_t k = m.count();
        auto flipped = m;
        for (auto& l : flipped.labels) l = l ? k + 1 - l : 0;
        const auto out = watershed(g, flipped);
        for (std::size_t p = 0; p < out.labels.size(); ++p) {
            CHECK(out.labels[p] == (base.labels[p] ? k + 1 - base.labels[p] : 0));
        }

        const int c = gen::uniform(rng, 1, 55);
        std::vector<std::uint8_t> shifted(g.pixels().begin(), g.pixels().end());
        for (auto& v : shifted) v = static_cast<std::uint8_t>(v + c);
        CHECK(watershed(ImageGrid(8, 8, shifted), m) == base);
    }
}

TEST_CASE("segments of the ridge") {
    SegmentMap map;
    map.width = 5;
    map.height = 1;
    map.labels = {1, 1, 0, 2, 2};
    const auto segs = extract_segments(map);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].area == 2);
    CHECK(segs[0].bbox == BoundingBox{0, 0, 2, 1});
    CHECK(segs[1].bbox == BoundingBox{3, 0, 2, 1});

    SegmentMap full;
    full.width = 4;
    full.height = 3;
    full.labels.assign(12, 1);
    const auto one = extract_segments(full);
    REQUIRE(one.size() == 1);
    CHECK(one[0].bbox == BoundingBox{0, 0, 4, 3});
    CHECK(one[0].area == 12);
    CHECK(one[0].contour.front() == Point{0, 0});
}

TEST_CASE("segment areas and contours match the pixel scan") {
    gen::Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        const int w = gen::uniform(rng, 1, 10), h = gen::uniform(rng, 1, 10);
        const auto g = gen::grid(rng, w, h, 6);
        const auto map = watershed(g, gen::markers(rng, w, h, 5));
        const auto segs = extract_segments(map);
        std::set<std::int32_t> ids(map.labels.begin(), map.labels.end());
        ids.erase(0);
        REQUIRE(segs.size() == ids.size());
        for (const auto& s : segs) {
            std::vector<std::uint8_t> bits(map.labels.size());
            std::uint64_t count = 0;
            for (std::size_t p = 0; p < bits.size(); ++p) {
                bits[p] = map.labels[p] == s.id;
                count += bits[p];
            }
            CHECK(s.area == count);
            CHECK(rle_decode(s.mask) == bits);
            const auto expected = oracle::boundary(bits, w, h);
            std::set<std::pair<int, int>> got;
            for (const auto& p : s.contour) got.insert({p.x, p.y});
            CHECK(got == expected);
            CHECK(s.contour.size() == expected.size());
            // Starts at the topmost-leftmost boundary pixel.
            const auto first = *std::min_element(expected.begin(), expected.end(), [](auto a, auto b) {
                return std::tie(a.second, a.first) < std::tie(b.second, b.first);
            });
            CHECK(s.contour.front() == Point{first.first, first.second});
        }
    }
}

TEST_CASE("rle examples") {
    CHECK(rle_encode(std::vector<std::uint8_t>{0, 0, 0, 0}, 2, 2).counts == std::vector<std::uint32_t>{4});
    CHECK(rle_encode(std::vector<std::uint8_t>{1, 1, 1, 1}, 2, 2).counts == std::vector<std::uint32_t>{0, 4});
    CHECK_THROWS_AS(rle_decode(MaskRLE{2, 2, {1, 2}}), SchemaError);
}

TEST_CASE("rle roundtrip") {
    gen::Rng rng(23);
    for (int i = 0; i < 1000; ++i) {
        const int w = gen::uniform(rng, 1, 16), h = gen::uniform(rng, 1, 16);
        const auto bits = gen::bits(rng, w, h, gen::uniform(rng, 0, 10) / 10.0);
        const auto rle = rle_encode(bits, w, h);
        CHECK(rle_decode(rle) == bits);
        std::uint64_t ones = 0;
        std::vector<std::size_t> idx;
        for (std::size_t p = 0; p < bits.size(); ++p) {
            if (bits[p]) {
                ++ones;
                idx.push_back(p);
            }
        }
        CHECK(rle_area(rle) == ones);
        CHECK(rle_from_indices(idx, w, h) == rle);
    }
}
