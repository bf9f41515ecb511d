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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>

#include "treatise/catalog/manifest.hpp"
#include "treatise/pipeline/run.hpp"

namespace treatise::cli {

struct CorpusOptions {
    bool force = false;
    std::size_t workers = 0;  // 0: hardware concurrency
    /// When set, every sidecar present after the run is indexed into this snapshot.
    std::optional<std::filesystem::path> index_path;
};

struct CorpusSummary {
    std::size_t processed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t backend_failures = 0;  // subset of failed
};

/// Runs the pipeline over every manifest image and writes sidecars beside the
/// images. Existing sidecars are skipped unless forced. Per-image failures are
/// reported on diag and counted; they never abort the run.
CorpusSummary run_corpus(const catalog::CorpusManifest& manifest, const pipeline::PipelineConfig& config,
                         const pipeline::Knowledge& knowledge, const CorpusOptions& options, std::ostream& diag);

}  // namespace treatise::cli
