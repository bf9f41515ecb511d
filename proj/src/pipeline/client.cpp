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
#include "treatise/pipeline/client.hpp"

#include <regex>
#include <stdexcept>
#include <thread>

#include <httplib.h>

namespace treatise::pipeline {

Url Url::parse(const std::string& text) {
    static const std::regex pattern(R"(^(http)://([A-Za-z0-9.\-]+|\[[0-9A-Fa-f:]+\])(?::(\d{1,5}))?(/[^?#\s]*)?$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("not an http URL: '" + text + "'");
    Url u;
    u.scheme = m[1].str();
    u.host = m[2].str();
    if (m[3].matched) {
        u.port = std::stoi(m[3].str());
        if (u.port < 1 || u.port > 65535) throw std::invalid_argument("port out of range in '" + text + "'");
    }
    u.path = m[4].matched ? m[4].str() : "";
    while (!u.path.empty() && u.path.back() == '/') u.path.pop_back();
    return u;
}

std::string Url::origin() const { return scheme + "://" + host + ":" + std::to_string(port); }

bool is_valid_url(const std::string& text) {
    try {
        Url::parse(text);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

BackendClient::BackendClient(Stage stage, std::string base_url, RetryPolicy policy)
    : stage_(stage), policy_(policy) {
    try {
        url_ = Url::parse(base_url);
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::usage, std::string(to_string(stage)) + " backend: " + e.what());
    }
    const std::string suffix = std::string("/v1/") + to_string(stage);
    endpoint_ = url_.path.ends_with(suffix) ? url_.path : url_.path + suffix;
}

BackendReply BackendClient::post(const std::string& body) const {
    std::string last_error;
    auto delay = policy_.backoff_base;
    for (int attempt = 0; attempt < std::max(policy_.attempts, 1); ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(delay);
            delay *= 2;
        }
        httplib::Client cli(url_.host, url_.port);
        const auto secs = std::chrono::duration_cast<std::chrono::seconds>(policy_.timeout);
        const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(policy_.timeout - secs);
        cli.set_connection_timeout(secs.count(), usecs.count());
        cli.set_read_timeout(secs.count(), usecs.count());
        cli.set_write_timeout(secs.count(), usecs.count());

        auto res = cli.Post(endpoint_, body, "application/json");
        if (!res) {
            last_error = "transport error: " + httplib::to_string(res.error()) + " (" + url_.origin() + endpoint_ + ")";
            continue;
        }
        if (res->status != 200) {
            std::string message = "HTTP " + std::to_string(res->status);
            try {
                const auto doc = nlohmann::json::parse(res->body);
                if (doc.is_object() && doc.contains("error") && doc["error"].is_string()) {
                    message += ": " + doc["error"].get<std::string>();
                }
            } catch (const nlohmann::json::exception&) {
            }
            if (res->status >= 400 && res->status < 500) throw BackendError(stage_, message);
            last_error = message;
            continue;
        }
        BackendReply reply;
        try {
            reply.body = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::parse_error& e) {
            throw WireError(stage_, std::string("response is not JSON: ") + e.what());
        }
        reply.backend_id = res->has_header("X-Treatise-Backend") ? res->get_header_value("X-Treatise-Backend")
                                                                  : url_.origin() + endpoint_;
        return reply;
    }
    throw BackendError(stage_, last_error + " after " + std::to_string(policy_.attempts) + " attempts");
}

}  // namespace treatise::pipeline
