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
#include "treatise/cli/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "treatise/catalog/sidecar.hpp"
#include "treatise/common/files.hpp"
#include "treatise/retrieval/index.hpp"

namespace treatise::cli {

namespace fs = std::filesystem;

CorpusSummary run_corpus(const catalog::CorpusManifest& manifest, const pipeline::PipelineConfig& config,
                         const pipeline::Knowledge& knowledge, const CorpusOptions& options, std::ostream& diag) {
    std::vector<fs::path> images;
    for (const auto& t : manifest.treatises) images.insert(images.end(), t.images.begin(), t.images.end());

    std::mutex diag_mutex;
    auto report = [&](const fs::path& image, const std::string& what) {
        std::lock_guard lock(diag_mutex);
        diag << "failed " << image.string() << ": " << what << '\n';
    };

    // The seed is write-once; build it before the workers share it.
    bool seed_ready = true;
    if (config.method == catalog::Method::m4 || config.method == catalog::Method::m4b) {
        try {
            pipeline::ensure_vocabulary(config, knowledge.glossary);
        } catch (const Error& e) {
            report(config.vocabulary_path.value_or("vocabulary"), e.what());
            seed_ready = false;
        }
    }

    std::atomic<std::size_t> next{0}, processed{0}, failed{0}, skipped{0}, backend{0};
    auto work = [&] {
        for (std::size_t i = next++; i < images.size(); i = next++) {
            const fs::path& image = images[i];
            const fs::path sidecar = catalog::sidecar_path_for(image);
            if (!options.force && fs::exists(sidecar)) {
                ++skipped;
                continue;
            }
            try {
                if (!seed_ready) throw Error(ErrorKind::backend, "vocabulary unavailable");
                const auto bytes = read_file_bytes(image);
                const auto record = pipeline::run_pipeline(bytes, image.string(), config, knowledge);
                catalog::write_sidecar(record, sidecar);
                ++processed;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::backend) ++backend;
                ++failed;
                report(image, e.what());
            } catch (const std::exception& e) {
                ++failed;
                report(image, e.what());
            }
        }
    };

    std::size_t n = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    n = std::min(n, std::max<std::size_t>(1, images.size()));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    if (options.index_path) {
        retrieval::Index index;
        if (fs::exists(*options.index_path)) index = retrieval::Index::load(*options.index_path);
        for (const auto& image : images) {
            const fs::path sidecar = catalog::sidecar_path_for(image);
            if (fs::exists(sidecar)) index.index_record(catalog::read_sidecar(sidecar));
        }
        index.save(*options.index_path);
    }
    return {processed.load(), failed.load(), skipped.load(), backend.load()};
}

}  // namespace treatise::cli
