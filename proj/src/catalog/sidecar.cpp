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
#include "treatise/catalog/sidecar.hpp"

#include "treatise/catalog/validate.hpp"
#include "treatise/common/files.hpp"
#include "treatise/common/json_schema.hpp"

namespace treatise::catalog {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace json_schema;

fs::path sidecar_path_for(const fs::path& image) {
    fs::path p = image;
    p += ".segments.json";
    return p;
}

fs::path truth_path_for(const fs::path& image) {
    fs::path p = image;
    p += ".truth.json";
    return p;
}

namespace {

const char* const kKnownKeys[] = {"schema_version", "image_id", "source_path", "width",
                                  "height", "segments", "assignments", "image_caption", "provenance"};

bool is_known_key(const std::string& key) {
    for (const char* k : kKnownKeys) {
        if (key == k) return true;
    }
    return false;
}

json segment_to_json(const Segment& s) {
    json contour = json::array();
    for (const auto& p : s.contour) contour.push_back({p.x, p.y});
    return {
        {"id", s.id},
        {"bbox", {s.bbox.x, s.bbox.y, s.bbox.w, s.bbox.h}},
        {"area", s.area},
        {"mask", {{"counts", s.mask.counts}}},
        {"contour", std::move(contour)},
    };
}

json assignment_to_json(const LabelAssignment& a) {
    json j = {{"text", a.text}, {"confidence", a.confidence}, {"source", to_string(a.source)}};
    if (a.concept_id) j["concept_id"] = *a.concept_id;
    if (a.definition) j["definition"] = *a.definition;
    return j;
}

int as_int(const json& v, const std::string& path) {
    const long long x = as_integer(v, path);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw SchemaError(path, "integer out of range");
    }
    return static_cast<int>(x);
}

BoundingBox box_from_json(const json& v, const std::string& path) {
    as_array(v, path);
    if (v.size() != 4) throw SchemaError(path, "expected [x, y, w, h]");
    return {as_int(v[0], path + "/0"), as_int(v[1], path + "/1"), as_int(v[2], path + "/2"),
            as_int(v[3], path + "/3")};
}

Segment segment_from_json(const json& v, const std::string& path, int width, int height) {
    Segment s;
    s.id = as_int(member(v, "id", path), path + "/id");
    s.bbox = box_from_json(member(v, "bbox", path), path + "/bbox");
    const long long area = as_integer(member(v, "area", path), path + "/area");
    if (area < 0) throw SchemaError(path + "/area", "negative area");
    s.area = static_cast<std::uint64_t>(area);

    const std::string mpath = path + "/mask";
    const json& counts = as_array(member(member(v, "mask", path), "counts", mpath), mpath + "/counts");
    s.mask.width = width;
    s.mask.height = height;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const long long c = as_integer(counts[i], mpath + "/counts/" + std::to_string(i));
        if (c < 0 || c > std::numeric_limits<std::uint32_t>::max()) {
            throw SchemaError(mpath + "/counts/" + std::to_string(i), "run length out of range");
        }
        s.mask.counts.push_back(static_cast<std::uint32_t>(c));
    }

    const std::string cpath = path + "/contour";
    const json& contour = as_array(member(v, "contour", path), cpath);
    for (std::size_t i = 0; i < contour.size(); ++i) {
        const std::string ppath = cpath + "/" + std::to_string(i);
        const json& pt = as_array(contour[i], ppath);
        if (pt.size() != 2) throw SchemaError(ppath, "expected [x, y]");
        s.contour.push_back({as_int(pt[0], ppath + "/0"), as_int(pt[1], ppath + "/1")});
    }
    return s;
}

LabelAssignment assignment_from_json(const json& v, const std::string& path) {
    LabelAssignment a;
    a.text = as_string(member(v, "text", path), path + "/text");
    a.confidence = as_number(member(v, "confidence", path), path + "/confidence");
    const std::string source = as_string(member(v, "source", path), path + "/source");
    try {
        a.source = label_source_from_string(source);
    } catch (const ParseError& e) {
        throw SchemaError(path + "/source", e.what());
    }
    if (const json* c = optional_member(v, "concept_id")) a.concept_id = as_string(*c, path + "/concept_id");
    if (const json* d = optional_member(v, "definition")) a.definition = as_string(*d, path + "/definition");
    return a;
}

Provenance provenance_from_json(const json& v, const std::string& path) {
    Provenance p;
    const std::string method = as_string(member(v, "method", path), path + "/method");
    try {
        p.method = method_from_string(method);
    } catch (const ParseError& e) {
        throw SchemaError(path + "/method", e.what());
    }
    const json& ids = as_object(member(v, "backend_ids", path), path + "/backend_ids");
    for (const auto& [stage, id] : ids.items()) {
        p.backend_ids[stage] = as_string(id, path + "/backend_ids/" + stage);
    }
    const json& hashes = as_array(member(v, "prompt_hashes", path), path + "/prompt_hashes");
    for (std::size_t i = 0; i < hashes.size(); ++i) {
        p.prompt_hashes.push_back(as_string(hashes[i], path + "/prompt_hashes/" + std::to_string(i)));
    }
    p.timestamp = as_string(member(v, "timestamp", path), path + "/timestamp");
    if (const json* stages = optional_member(v, "stages")) {
        as_array(*stages, path + "/stages");
        for (std::size_t i = 0; i < stages->size(); ++i) {
            p.stages.push_back(as_string((*stages)[i], path + "/stages/" + std::to_string(i)));
        }
    }
    if (const json* d = optional_member(v, "degraded")) p.degraded = as_bool(*d, path + "/degraded");
    return p;
}

}  // namespace

json record_to_json(const ImageRecord& record) {
    json doc = record.extra.is_object() ? record.extra : json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["image_id"] = record.image_id;
    doc["source_path"] = record.source_path;
    doc["width"] = record.width;
    doc["height"] = record.height;

    json segments = json::array();
    for (const auto& s : record.segments) segments.push_back(segment_to_json(s));
    doc["segments"] = std::move(segments);

    json assignments = json::object();
    for (const auto& [id, labels] : record.assignments) {
        json list = json::array();
        for (const auto& a : labels) list.push_back(assignment_to_json(a));
        assignments[std::to_string(id)] = std::move(list);
    }
    doc["assignments"] = std::move(assignments);

    if (record.image_caption) doc["image_caption"] = *record.image_caption;

    const auto& p = record.provenance;
    doc["provenance"] = {
        {"method", to_string(p.method)},       {"backend_ids", p.backend_ids},
        {"prompt_hashes", p.prompt_hashes},    {"timestamp", p.timestamp},
        {"stages", p.stages},                  {"degraded", p.degraded},
    };
    return doc;
}

ImageRecord record_from_json(const json& doc) {
    as_object(doc, "/");
    const long long version = as_integer(member(doc, "schema_version", ""), "/schema_version");
    if (version > kSchemaVersion || version < 1) {
        throw SchemaError("/schema_version", "unsupported schema version " + std::to_string(version));
    }
    ImageRecord r;
    r.image_id = as_string(member(doc, "image_id", ""), "/image_id");
    r.source_path = as_string(member(doc, "source_path", ""), "/source_path");
    r.width = as_int(member(doc, "width", ""), "/width");
    r.height = as_int(member(doc, "height", ""), "/height");

    const json& segments = as_array(member(doc, "segments", ""), "/segments");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        r.segments.push_back(segment_from_json(segments[i], "/segments/" + std::to_string(i), r.width, r.height));
    }

    const json& assignments = as_object(member(doc, "assignments", ""), "/assignments");
    for (const auto& [key, list] : assignments.items()) {
        const std::string path = "/assignments/" + key;
        std::int32_t id = 0;
        try {
            std::size_t used = 0;
            id = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw SchemaError(path, "segment id key is not an integer");
        }
        as_array(list, path);
        auto& out = r.assignments[id];
        for (std::size_t j = 0; j < list.size(); ++j) {
            out.push_back(assignment_from_json(list[j], path + "/" + std::to_string(j)));
        }
    }

    if (const json* c = optional_member(doc, "image_caption")) r.image_caption = as_string(*c, "/image_caption");
    r.provenance = provenance_from_json(member(doc, "provenance", ""), "/provenance");

    for (const auto& [key, value] : doc.items()) {
        if (!is_known_key(key)) r.extra[key] = value;
    }
    return r;
}

std::string serialize_record(const ImageRecord& record) {
    ensure_valid(record);
    return record_to_json(record).dump();
}

ImageRecord parse_record(std::string_view bytes) {
    ImageRecord r = record_from_json(json_schema::parse(bytes, "sidecar"));
    ensure_valid(r);
    return r;
}

void write_sidecar(const ImageRecord& record, const fs::path& destination) {
    write_file_atomic(destination, serialize_record(record));
}

ImageRecord read_sidecar(const fs::path& source) { return parse_record(read_file_text(source)); }

}  // namespace treatise::catalog
