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

#include <algorithm>
#include <filesystem>
#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "treatise/catalog/geometry.hpp"
#include "treatise/catalog/manifest.hpp"
#include "treatise/catalog/overlay.hpp"
#include "treatise/catalog/sidecar.hpp"
#include "treatise/catalog/validate.hpp"
#include "treatise/common/files.hpp"
#include "treatise/common/hash.hpp"

using namespace treatise;
using namespace treatise::catalog;
using nlohmann::json;

namespace {

bool has_violation(const ImageRecord& r, const std::string& path) {
    const auto v = validate_record(r);
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.path == path; });
}

ImageRecord two_segment_record() {
    ImageRecord r;
    r.image_id = sha256_hex("page");
    r.source_path = "page.pgm";
    r.width = 5;
    r.height = 1;
    const std::vector<std::size_t> left{0, 1}, right{3, 4};
    r.segments.push_back(raster::segment_from_mask(1, raster::rle_from_indices(left, 5, 1)));
    r.segments.push_back(raster::segment_from_mask(2, raster::rle_from_indices(right, 5, 1)));
    r.assignments[1] = {{"keel", 0.9, LabelSource::grounder, "Keel", "the keel"}, {"quilha", 0.5, LabelSource::tagger, {}, {}}};
    r.assignments[2] = {{"sternpost", 1.0, LabelSource::human, {}, {}}};
    r.provenance.timestamp = "2026-10-16T00:00:00Z";
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "treatise_catalog_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

/// Re-emits a JSON value with object keys in shuffled order.
}  // namespace

TEST_CASE("empty and two-segment records roundtrip through files") {
    ImageRecord empty;
    empty.image_id = sha256_hex("blank");
    empty.width = 3;
    empty.height = 2;
    empty.provenance.timestamp = "2026-10-16T00:00:00Z";
    const auto p = scratch("empty.segments.json");
    write_sidecar(empty, p);
    CHECK(read_file_text(p).find("\"segments\":[]") != std::string::npos);
    CHECK(read_sidecar(p) == empty);

    const auto r = two_segment_record();
    write_sidecar(r, p);
    CHECK(read_sidecar(p) == r);
}

TEST_CASE("serialization is canonical") {
    const auto r = two_segment_record();
    const std::string bytes = serialize_record(r);
    CHECK(bytes.find('\n') == std::string::npos);
    CHECK(json::parse(bytes).dump() == bytes);  // sorted keys, compact

    // Same record built in another order.
    ImageRecord other;
    other.provenance.timestamp = r.provenance.timestamp;
    other.assignments[2] = r.assignments.at(2);
    other.segments = r.segments;
    other.assignments[1] = r.assignments.at(1);
    other.height = 1;
    other.width = 5;
    other.source_path = r.source_path;
    other.image_id = r.image_id;
    CHECK(serialize_record(other) == bytes);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 20; ++i) CHECK(serialize_record(parse_record(gen::shuffled_dump(json::parse(bytes), rng))) == bytes);
}

TEST_CASE("fuzzed records roundtrip") {
    gen::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto r = gen::record(rng);
        REQUIRE(validate_record(r).empty());
        const std::string bytes = serialize_record(r);
        const auto back = parse_record(bytes);
        CHECK(back == r);
        CHECK(serialize_record(back) == bytes);
    }
}

TEST_CASE("foreign keys survive a roundtrip") {
    json doc = json::parse(serialize_record(two_segment_record()));
    doc["notes"] = {{"curator", "checked against the plate"}};
    const auto r = parse_record(doc.dump());
    CHECK(json::parse(serialize_record(r))["notes"] == doc["notes"]);
}

TEST_CASE("schema errors name the path") {
    json doc = json::parse(serialize_record(two_segment_record()));
    doc.erase("segments");
    try {
        parse_record(doc.dump());
        FAIL("accepted a record without segments");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "/segments");
    }
    CHECK_THROWS_AS(parse_record("{not json"), ParseError);

    json future = json::parse(serialize_record(two_segment_record()));
    future["schema_version"] = 2;
    CHECK_THROWS_AS(parse_record(future.dump()), SchemaError);
}

TEST_CASE("validation reports each injected fault") {
    const auto base = two_segment_record();
    CHECK(validate_record(base).empty());

    auto r = base;
    r.segments[0].bbox.w = 9;
    CHECK(has_violation(r, "/segments/0/bbox"));

    r = base;
    r.assignments[9] = {{"keel", 1.0, LabelSource::human, {}, {}}};
    CHECK(has_violation(r, "/assignments/9"));

    r = base;
    r.segments[1].area = 7;
    CHECK(has_violation(r, "/segments/1/area"));

    r = base;
    r.segments[1].id = 1;
    CHECK(has_violation(r, "/segments/1/id"));

    r = base;
    r.segments[0].mask.counts = {0, 2};
    CHECK(has_violation(r, "/segments/0/mask"));

    r = base;
    r.segments[0].contour.push_back({4, 0});
    CHECK(has_violation(r, "/segments/0/contour/2"));

    r = base;
    r.assignments[1][0].confidence = 1.5;
    CHECK(has_violation(r, "/assignments/1/0/confidence"));

    r = base;
    r.assignments[2][0].text = "  ";
    CHECK(has_violation(r, "/assignments/2/0/text"));

    r = base;
    r.image_id = "ABC";
    CHECK(has_violation(r, "/image_id"));

    r = base;
    r.provenance.timestamp = "yesterday";
    CHECK(has_violation(r, "/provenance/timestamp"));

    r = base;
    r.provenance.prompt_hashes = {"xyz"};
    CHECK(has_violation(r, "/provenance/prompt_hashes/0"));

    CHECK_THROWS_AS(serialize_record(r), ValidationError);
}

TEST_CASE("image ids are content hashes") {
    auto r = two_segment_record();
    const std::vector<std::uint8_t> bytes{'p', 'a', 'g', 'e'};
    CHECK(verify_image_id(r, bytes));
    r.image_id = sha256_hex("other");
    CHECK_FALSE(verify_image_id(r, bytes));
}

TEST_CASE("box iou") {
    const BoundingBox a{0, 0, 2, 2}, b{1, 1, 2, 2};
    CHECK(box_iou(a, a) == 1.0);
    CHECK(box_iou(a, BoundingBox{5, 5, 1, 1}) == 0.0);
    CHECK(box_iou(a, b) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));

    gen::Rng rng(37);
    for (int i = 0; i < 500; ++i) {
        auto box = [&] { return BoundingBox{gen::uniform(rng, 0, 8), gen::uniform(rng, 0, 8), gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 6)}; };
        const auto p = box(), q = box();
        // Pixel-count oracle.
        int inter = 0, uni = 0;
        for (int y = 0; y < 16; ++y) {
            for (int x = 0; x < 16; ++x) {
                inter += p.contains(x, y) && q.contains(x, y);
                uni += p.contains(x, y) || q.contains(x, y);
            }
        }
        CHECK(box_iou(p, q) == doctest::Approx(static_cast<double>(inter) / uni).epsilon(1e-15));
        CHECK(box_iou(p, q) == box_iou(q, p));
        const int dx = gen::uniform(rng, 0, 5), dy = gen::uniform(rng, 0, 5);
        CHECK(box_iou({p.x + dx, p.y + dy, p.w, p.h}, {q.x + dx, q.y + dy, q.w, q.h}) == box_iou(p, q));
    }
}

TEST_CASE("overlay changes exactly contours and box borders") {
    const raster::ImageGrid g(5, 1, std::uint8_t{100});
    ImageRecord none;
    none.width = 5;
    none.height = 1;
    CHECK(render_overlay(g, none) == g);

    gen::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        auto r = gen::record(rng);
        const auto grid = gen::grid(rng, r.width, r.height);
        const auto out = render_overlay(grid, r);
        std::vector<int> expected(grid.pixels().begin(), grid.pixels().end());
        for (const auto& s : r.segments) {
            for (const auto& p : s.contour) expected[static_cast<std::size_t>(p.y * r.width + p.x)] = 255;
        }
        for (const auto& s : r.segments) {
            const auto& b = s.bbox;
            for (int y = b.y; y < b.y + b.h; ++y) {
                for (int x = b.x; x < b.x + b.w; ++x) {
                    if (x == b.x || y == b.y || x == b.x + b.w - 1 || y == b.y + b.h - 1) {
                        expected[static_cast<std::size_t>(y * r.width + x)] = 0;
                    }
                }
            }
        }
        CHECK(std::equal(expected.begin(), expected.end(), out.pixels().begin()));
    }
    const raster::ImageGrid wrong(2, 2, std::uint8_t{0});
    CHECK_THROWS(render_overlay(wrong, two_segment_record()));
}

TEST_CASE("manifest") {
    const auto m = parse_manifest(R"({"treatises":[{"title":"Livro","language":"pt","year":1600,"images":["a.pgm","b.pgm"]}]})",
                                  "/corpus");
    CHECK(m.total_images() == 2);
    CHECK(m.treatises[0].images[0] == std::filesystem::path("/corpus/a.pgm"));
    CHECK_THROWS_AS(parse_manifest(R"({"treatises":[{"title":"x","language":"en","year":1900,"images":[]}]})", "."),
                    SchemaError);
    CHECK_NOTHROW(parse_manifest(R"({"year_range":[1500,1950],"treatises":[{"title":"x","language":"en","year":1900,"images":[]}]})", "."));
    CHECK_THROWS_AS(parse_manifest("[", "."), ParseError);
}

TEST_CASE("sidecar paths") {
    CHECK(sidecar_path_for("pages/p1.pgm") == std::filesystem::path("pages/p1.pgm.segments.json"));
    CHECK(truth_path_for("pages/p1.pgm") == std::filesystem::path("pages/p1.pgm.truth.json"));
}
