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
#include "treatise/raster/kernels.hpp"

namespace treatise::raster::kernels {

void sobel_row_scalar(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                      int width, std::uint8_t* out) {
    for (int x = 0; x < width; ++x) {
        const int l = x > 0 ? x - 1 : 0;
        const int r = x + 1 < width ? x + 1 : width - 1;
        const int gx = (above[r] - above[l]) + 2 * (row[r] - row[l]) + (below[r] - below[l]);
        const int gy = (below[l] + 2 * below[x] + below[r]) - (above[l] + 2 * above[x] + above[r]);
        out[x] = sobel_magnitude(gx, gy);
    }
}

}  // namespace treatise::raster::kernels
