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
#include "treatise/catalog/geometry.hpp"

#include <algorithm>

namespace treatise::catalog {

std::int64_t box_intersection(const BoundingBox& a, const BoundingBox& b) {
    const std::int64_t w = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
    const std::int64_t h = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
    return w > 0 && h > 0 ? w * h : 0;
}

double box_iou(const BoundingBox& a, const BoundingBox& b) {
    const std::int64_t inter = box_intersection(a, b);
    const std::int64_t uni = a.area() + b.area() - inter;
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

}  // namespace treatise::catalog
