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
#include "treatise/raster/gradient.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "treatise/raster/kernels.hpp"

namespace treatise::raster {

namespace {

using RowKernel = void (*)(const std::uint8_t*, const std::uint8_t*, const std::uint8_t*, int, std::uint8_t*);

bool cpu_has_avx2() {
#if defined(TREATISE_HAVE_AVX2)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

RowKernel kernel_for(KernelIsa isa) {
    switch (isa) {
        case KernelIsa::scalar:
            return kernels::sobel_row_scalar;
        case KernelIsa::avx2:
#if defined(TREATISE_HAVE_AVX2)
            if (cpu_has_avx2()) return kernels::sobel_row_avx2;
#endif
            break;
    }
    throw std::invalid_argument(std::string("kernel ISA not available: ") + to_string(isa));
}

}  // namespace

const char* to_string(KernelIsa isa) {
    switch (isa) {
        case KernelIsa::scalar: return "scalar";
        case KernelIsa::avx2: return "avx2";
    }
    return "?";
}

std::vector<KernelIsa> available_isas() {
    std::vector<KernelIsa> isas{KernelIsa::scalar};
    if (cpu_has_avx2()) isas.push_back(KernelIsa::avx2);
    return isas;
}

KernelIsa preferred_isa() {
    static const KernelIsa chosen = [] {
        if (std::getenv("TREATISE_FORCE_SCALAR") != nullptr) return KernelIsa::scalar;
        return available_isas().back();
    }();
    return chosen;
}

ImageGrid gradient_magnitude(const ImageGrid& grid) { return gradient_magnitude(grid, preferred_isa()); }

ImageGrid gradient_magnitude(const ImageGrid& grid, KernelIsa isa) {
    const RowKernel kernel = kernel_for(isa);
    const int w = grid.width();
    const int h = grid.height();
    ImageGrid out(w, h, std::uint8_t{0});
    const std::uint8_t* src = grid.pixels().data();
    std::uint8_t* dst = out.pixels().data();
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* above = src + static_cast<std::size_t>(std::max(y - 1, 0)) * w;
        const std::uint8_t* row = src + static_cast<std::size_t>(y) * w;
        const std::uint8_t* below = src + static_cast<std::size_t>(std::min(y + 1, h - 1)) * w;
        kernel(above, row, below, w, dst + static_cast<std::size_t>(y) * w);
    }
    return out;
}

}  // namespace treatise::raster
