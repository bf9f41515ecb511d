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

// Small helpers for reading JSON documents with path-qualified schema errors.

#include <string>

#include <json.hpp>

#include "treatise/common/error.hpp"

namespace treatise::json_schema {

using nlohmann::json;

inline std::string join(const std::string& base, const std::string& key) { return base + "/" + key; }

inline const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(join(path, key), "missing required key");
    return *it;
}

inline const json* optional_member(const json& obj, const std::string& key) {
    const auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

inline std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected a string");
    return v.get<std::string>();
}

inline long long as_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
    return v.get<long long>();
}

inline double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) throw SchemaError(path, "expected a number");
    return v.get<double>();
}

inline bool as_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) throw SchemaError(path, "expected a boolean");
    return v.get<bool>();
}

inline const json& as_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array");
    return v;
}

inline const json& as_object(const json& v, const std::string& path) {
    if (!v.is_object()) throw SchemaError(path, "expected an object");
    return v;
}

/// Parses text, mapping syntax errors onto ParseError.
inline json parse(std::string_view text, const std::string& what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

}  // namespace treatise::json_schema
