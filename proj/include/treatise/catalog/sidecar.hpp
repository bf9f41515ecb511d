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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "treatise/catalog/record.hpp"

namespace treatise::catalog {

/// Sidecar path convention: "<image>.segments.json" next to the image.
std::filesystem::path sidecar_path_for(const std::filesystem::path& image);
/// Ground-truth path convention: "<image>.truth.json".
std::filesystem::path truth_path_for(const std::filesystem::path& image);

nlohmann::json record_to_json(const ImageRecord& record);
/// Throws SchemaError naming the offending JSON pointer.
ImageRecord record_from_json(const nlohmann::json& doc);

/// Canonical bytes: UTF-8, keys sorted by code point, no insignificant
/// whitespace. Equal records serialize to identical bytes. Throws
/// ValidationError if the record does not validate.
std::string serialize_record(const ImageRecord& record);

/// Parses and validates. Throws ParseError on malformed JSON and SchemaError
/// (with a path) on schema or invariant violations.
ImageRecord parse_record(std::string_view bytes);

/// Validates, then writes atomically. Nothing is written on failure.
void write_sidecar(const ImageRecord& record, const std::filesystem::path& destination);
ImageRecord read_sidecar(const std::filesystem::path& source);

}  // namespace treatise::catalog
