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
#include "treatise/pipeline/mock_server.hpp"

#include <httplib.h>

#include "treatise/common/files.hpp"
#include "treatise/common/hash.hpp"
#include "treatise/common/json_schema.hpp"
#include "treatise/pipeline/prompts.hpp"
#include "treatise/raster/pgm.hpp"
#include "treatise/raster/rle.hpp"

namespace treatise::pipeline {

using nlohmann::json;

namespace {

constexpr const char* kBackendId = "treatise-mock/1";

json error_body(const std::string& message) { return {{"error", message}}; }

raster::ImageGrid decode_image(const json& req) {
    if (!req.is_object() || !req.contains("image_b64") || !req["image_b64"].is_string()) {
        throw ParseError("missing image_b64");
    }
    const auto bytes = base64_decode(req["image_b64"].get<std::string>());
    return raster::decode_pgm(bytes);
}

json box_json(const catalog::BoundingBox& b) { return json::array({b.x, b.y, b.w, b.h}); }

std::vector<std::uint32_t> box_mask_counts(const catalog::BoundingBox& b, int width, int height) {
    std::vector<std::size_t> idx;
    for (int y = b.y; y < b.y + b.h; ++y) {
        for (int x = b.x; x < b.x + b.w; ++x) {
            idx.push_back(static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x));
        }
    }
    return raster::rle_from_indices(idx, width, height).counts;
}

// Index of the quadrant with the lowest mean intensity; earlier quadrants win ties.
std::size_t darkest_quadrant(const raster::ImageGrid& img, const std::vector<catalog::BoundingBox>& boxes) {
    std::size_t best = 0;
    std::uint64_t best_sum = 0;
    std::uint64_t best_n = 0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& b = boxes[i];
        std::uint64_t sum = 0;
        for (int y = b.y; y < b.y + b.h; ++y) {
            for (int x = b.x; x < b.x + b.w; ++x) sum += img.at(x, y);
        }
        const auto n = static_cast<std::uint64_t>(b.area());
        if (i == 0 || sum * best_n < best_sum * n) {
            best = i;
            best_sum = sum;
            best_n = n;
        }
    }
    return best;
}

}  // namespace

std::vector<catalog::BoundingBox> quadrant_boxes(int width, int height) {
    const int w0 = width / 2, w1 = width - w0;
    const int h0 = height / 2, h1 = height - h0;
    const catalog::BoundingBox all[4] = {{0, 0, w0, h0}, {w0, 0, w1, h0}, {0, h0, w0, h1}, {w0, h0, w1, h1}};
    std::vector<catalog::BoundingBox> out;
    for (const auto& b : all) {
        if (b.w > 0 && b.h > 0) out.push_back(b);
    }
    return out;
}

MockBackend::MockBackend(json fixture_table, std::size_t max_tags)
    : table_(fixture_table.is_object() ? std::move(fixture_table) : json::object()), max_tags_(max_tags) {}

std::size_t MockBackend::call_count(Stage stage) const { return counts_[static_cast<std::size_t>(stage)].load(); }

void MockBackend::reset_counts() {
    for (auto& c : counts_) c.store(0);
}

MockBackend::Reply MockBackend::handle(Stage stage, const std::string& body) {
    counts_[static_cast<std::size_t>(stage)].fetch_add(1);

    const auto endpoint = table_.find(to_string(stage));
    if (endpoint != table_.end() && endpoint->is_object()) {
        const auto hit = endpoint->find(sha256_hex(body));
        if (hit != endpoint->end()) {
            json response = *hit;
            int status = 200;
            if (response.is_object() && response.contains("__status")) {
                status = response["__status"].get<int>();
                response.erase("__status");
            }
            return {status, response};
        }
    }

    json req;
    try {
        req = json::parse(body);
    } catch (const json::parse_error& e) {
        return {400, error_body(std::string("request is not JSON: ") + e.what())};
    }

    try {
        switch (stage) {
            case Stage::segment: {
                const auto img = decode_image(req);
                json segments = json::array();
                for (const auto& b : quadrant_boxes(img.width(), img.height())) {
                    segments.push_back({{"bbox", box_json(b)}, {"mask", {{"counts", box_mask_counts(b, img.width(), img.height())}}}});
                }
                return {200, {{"segments", segments}}};
            }
            case Stage::caption:
                decode_image(req);
                return {200, {{"caption", "a page from a treatise"}}};
            case Stage::tag: {
                decode_image(req);
                json tags = json::array();
                if (req.contains("vocabulary") && req["vocabulary"].is_array()) {
                    for (const auto& term : req["vocabulary"]) {
                        if (tags.size() >= max_tags_) break;
                        if (!term.is_string()) return {400, error_body("vocabulary holds a non-string")};
                        tags.push_back({{"text", term}, {"confidence", 1.0}});
                    }
                }
                return {200, {{"tags", tags}}};
            }
            case Stage::ground: {
                const auto img = decode_image(req);
                if (!req.contains("tags") || !req["tags"].is_array()) return {400, error_body("missing tags")};
                const auto boxes = quadrant_boxes(img.width(), img.height());
                const auto target = boxes[darkest_quadrant(img, boxes)];
                json detections = json::array();
                for (const auto& tag : req["tags"]) {
                    if (!tag.is_string()) return {400, error_body("tags holds a non-string")};
                    detections.push_back({{"text", tag}, {"confidence", 1.0}, {"bbox", box_json(target)}});
                }
                return {200, {{"detections", detections}}};
            }
            case Stage::define: {
                if (!req.contains("prompt") || !req["prompt"].is_string()) return {400, error_body("missing prompt")};
                const std::string term = term_from_definition_prompt(req["prompt"].get<std::string>());
                return {200, {{"definition", "the " + term + " is a structural component of a wooden ship."}}};
            }
        }
    } catch (const Error& e) {
        return {400, error_body(e.what())};
    }
    return {404, error_body("unknown endpoint")};
}

MockServer::MockServer(json fixture_table, std::size_t max_tags)
    : backend_(std::move(fixture_table), max_tags), server_(std::make_unique<httplib::Server>()) {
    install_routes();
}

MockServer::~MockServer() { stop(); }

void MockServer::install_routes() {
    for (Stage stage : kAllStages) {
        server_->Post(std::string("/v1/") + to_string(stage),
                      [this, stage](const httplib::Request& req, httplib::Response& res) {
                          const auto reply = backend_.handle(stage, req.body);
                          res.status = reply.status;
                          res.set_header("X-Treatise-Backend", kBackendId);
                          res.set_content(reply.body.dump(), "application/json");
                      });
    }
}

int MockServer::start(const std::string& host, int port) {
    host_ = host;
    port_ = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (port_ < 0) throw IoError("mock server cannot bind " + host + ":" + std::to_string(port));
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port_;
}

void MockServer::serve_forever(const std::string& host, int port) {
    host_ = host;
    port_ = port;
    if (!server_->listen(host, port)) throw IoError("mock server cannot listen on " + host + ":" + std::to_string(port));
}

void MockServer::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

std::string MockServer::url() const { return "http://" + host_ + ":" + std::to_string(port_); }

json load_fixture_table(const std::filesystem::path& path) {
    json doc = json_schema::parse(read_file_text(path), "mock fixture table");
    if (!doc.is_object()) throw SchemaError("/", "fixture table must be an object");
    return doc;
}

}  // namespace treatise::pipeline
