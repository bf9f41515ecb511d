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

#include <chrono>
#include <string>

#include <json.hpp>

#include "treatise/common/error.hpp"
#include "treatise/pipeline/wire.hpp"

namespace treatise::pipeline {

/// Transport failure, remote error or timeout, after retries; names the stage.
class BackendError : public Error {
public:
    BackendError(Stage stage, const std::string& what)
        : Error(ErrorKind::backend, std::string("backend ") + to_string(stage) + ": " + what), stage_(stage) {}
    Stage stage() const noexcept { return stage_; }

private:
    Stage stage_;
};

struct RetryPolicy {
    int attempts = 3;
    std::chrono::milliseconds backoff_base{100};  // doubles after every failed attempt
    std::chrono::milliseconds timeout{10000};
};

/// Parsed "http://host[:port][/prefix]". Throws std::invalid_argument otherwise.
struct Url {
    std::string scheme;
    std::string host;
    int port = 80;
    std::string path;  // without trailing slash

    static Url parse(const std::string& text);
    std::string origin() const;
};

bool is_valid_url(const std::string& text);

struct BackendReply {
    nlohmann::json body;
    std::string backend_id;  // X-Treatise-Backend header, or the URL
};

/// POSTs JSON to one stage of a backend. The endpoint is "<base>/v1/<stage>"
/// unless the base URL already ends with that path. Safe to use from several
/// threads; every call opens its own connection.
class BackendClient {
public:
    BackendClient(Stage stage, std::string base_url, RetryPolicy policy = {});

    /// Retries transport failures and 5xx replies with exponential backoff;
    /// 4xx replies fail immediately. Throws BackendError.
    BackendReply post(const std::string& body) const;

    Stage stage() const noexcept { return stage_; }
    /// Full URL the client posts to.
    std::string endpoint() const { return url_.origin() + endpoint_; }

private:
    Stage stage_;
    Url url_;
    std::string endpoint_;
    RetryPolicy policy_;
};

}  // namespace treatise::pipeline
