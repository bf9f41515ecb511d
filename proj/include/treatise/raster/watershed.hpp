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

/// Marker-controlled watershed by immersion, 4-connectivity.
///
/// Intensity levels are flooded in ascending order. Within a level, region
/// growth proceeds in breadth-first waves through unassigned pixels whose
/// intensity is at or below the level; every pixel in a wave is decided from
/// the labels that existed before that wave. A pixel touching exactly one
/// region joins it; a pixel touching two or more regions becomes a watershed
/// line pixel (label 0). Line pixels never propagate. Pixels the flood never
/// reaches (fully enclosed by line pixels) are also reported as line.
/// Marker pixels keep their marker label.
///
/// Throws SchemaError on a dimension mismatch or a marker map with no labels.
SegmentMap watershed(const ImageGrid& grid, const MarkerMap& markers);

}  // namespace treatise::raster
