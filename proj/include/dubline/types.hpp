// Copyright 2026 The dubline Authors
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
#include <cstdint>
#include <string_view>

namespace dubline {

/// 2D point / vector, meters.
using Vec2 = std::array<double, 2>;

/// The four path families considered by the planner. R and L are clockwise
/// and counter-clockwise maximum-curvature arcs, S is a straight segment.
enum class PathType : std::uint8_t { RSR = 0, RSL = 1, LSL = 2, LSR = 3 };

/// Fixed evaluation/tie-break order.
inline constexpr std::array<PathType, 4> kAllPathTypes{
    PathType::RSR, PathType::RSL, PathType::LSL, PathType::LSR};

[[nodiscard]] constexpr std::string_view to_string(PathType t) noexcept {
    switch (t) {
        case PathType::RSR: return "RSR";
        case PathType::RSL: return "RSL";
        case PathType::LSL: return "LSL";
        case PathType::LSR: return "LSR";
    }
    return "???";
}

/// Handedness of the initial arc.
[[nodiscard]] constexpr bool starts_right(PathType t) noexcept {
    return t == PathType::RSR || t == PathType::RSL;
}

/// Handedness of the final arc.
[[nodiscard]] constexpr bool ends_right(PathType t) noexcept {
    return t == PathType::RSR || t == PathType::LSR;
}

}  // namespace dubline
