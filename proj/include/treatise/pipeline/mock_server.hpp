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

#include <array>
#include <atomic>
#include <filesystem>
#include <memory>
#include <string>
#include <thread>

#include <json.hpp>

#include "treatise/pipeline/wire.hpp"

namespace httplib {
class Server;
}

namespace treatise::pipeline {

/// Deterministic stand-in for the model backends.
///
/// Every response is a pure function of (endpoint, SHA-256 of the request
/// body). The fixture table {"<endpoint>": {"<sha256 hex>": <response>}}
/// is consulted first; a fixture response carrying "__status" is returned
/// with that HTTP status. Otherwise:
///   segment  four quadrant boxes (empty quadrants of 1-pixel-wide images are dropped)
///   caption  "a page from a treatise"
///   tag      the first max_tags vocabulary terms, confidence 1.0
///   ground   every tag on the quadrant with the lowest mean intensity (row-major tie-break)
///   define   "the <term> is a structural component of a wooden ship."
class MockBackend {
public:
    struct Reply {
        int status = 200;
        nlohmann::json body;
    };

    explicit MockBackend(nlohmann::json fixture_table = nlohmann::json::object(), std::size_t max_tags = 32);

    /// Thread-safe; counts the call.
    Reply handle(Stage stage, const std::string& body);

    std::size_t call_count(Stage stage) const;
    void reset_counts();

private:
    nlohmann::json table_;
    std::size_t max_tags_;
    std::array<std::atomic<std::size_t>, 5> counts_{};
};

std::vector<catalog::BoundingBox> quadrant_boxes(int width, int height);

/// HTTP front end for MockBackend, served from a background thread.
class MockServer {
public:
    explicit MockServer(nlohmann::json fixture_table = nlohmann::json::object(), std::size_t max_tags = 32);
    ~MockServer();
    MockServer(const MockServer&) = delete;
    MockServer& operator=(const MockServer&) = delete;

    /// Binds (port 0 picks a free port) and starts serving; returns the port.
    int start(const std::string& host = "127.0.0.1", int port = 0);
    /// Serves on the calling thread until stop() is called from elsewhere.
    void serve_forever(const std::string& host, int port);
    void stop();

    std::string url() const;
    MockBackend& backend() { return backend_; }

private:
    void install_routes();

    MockBackend backend_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    std::string host_ = "127.0.0.1";
    int port_ = 0;
};

nlohmann::json load_fixture_table(const std::filesystem::path& path);

}  // namespace treatise::pipeline
