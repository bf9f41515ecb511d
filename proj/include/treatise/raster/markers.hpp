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

#include "treatise/raster/image.hpp"

namespace treatise::raster {

/// Seeds for marker-controlled watershed: the regional minima of the h-minima
/// transform of `grid` (reconstruction by erosion of grid + h over grid).
/// Each 4-connected minimal plateau gets its own label; labels are numbered
/// 1..K in row-major order of each plateau's first pixel. h = 0 yields the
/// plain regional minima. A constant image yields a single full-frame marker.
MarkerMap regional_minima_markers(const ImageGrid& grid, int h);

}  // namespace treatise::raster
