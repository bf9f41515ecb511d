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

#include <vector>

#include "treatise/raster/image.hpp"

namespace treatise::raster {

enum class KernelIsa { scalar, avx2 };

const char* to_string(KernelIsa isa);

/// Instruction sets compiled in and supported by the running CPU, scalar first.
std::vector<KernelIsa> available_isas();

/// Widest available ISA. Setting TREATISE_FORCE_SCALAR in the environment pins scalar.
KernelIsa preferred_isa();

/// Sobel gradient magnitude with edge replication:
///   gx = [-1 0 1; -2 0 2; -1 0 1], gy = gx^T,
///   out = min(255, floor(sqrt(gx^2 + gy^2) / 4 + 0.5)).
/// The 1/4 normalization makes a single-row image reduce to |p[x+1] - p[x-1]|.
ImageGrid gradient_magnitude(const ImageGrid& grid);
ImageGrid gradient_magnitude(const ImageGrid& grid, KernelIsa isa);

}  // namespace treatise::raster
