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

// Heading convention (everywhere in this library, world and canonical frame):
// a heading psi is a compass angle, measured clockwise from the +y axis, so
// the unit velocity vector is (sin psi, cos psi). psi = 0 points along +y,
// psi = pi/2 along +x. A right (R) turn increases psi, a left (L) turn
// decreases it. Line directions use the same convention.

#include <array>
#include <utility>

#include "dubline/types.hpp"

namespace dubline {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Wrap an angle to [0, 2*pi). Throws ErrorCode::invalid_argument on
/// non-finite input.
[[nodiscard]] double normalize_angle(double theta);

/// Wrap a turn magnitude to [0, 2*pi), collapsing values within 1e-12 rad of
/// the branch cut (0 or 2*pi) to exactly 0 so that degenerate arcs stay
/// empty instead of becoming full circles through rounding noise.
[[nodiscard]] double normalize_turn(double theta);

// Divide first: 90/180 is exact in binary, so right angles convert exactly.
[[nodiscard]] constexpr double deg_to_rad(double deg) noexcept {
    return deg / 180.0 * 3.141592653589793238462643383279502884;
}
[[nodiscard]] constexpr double rad_to_deg(double rad) noexcept {
    return rad / 3.141592653589793238462643383279502884 * 180.0;
}

/// R <-> L swapped in both arc positions (RSR<->LSL, RSL<->LSR).
[[nodiscard]] constexpr PathType mirror_path_type(PathType t) noexcept {
    switch (t) {
        case PathType::RSR: return PathType::LSL;
        case PathType::RSL: return PathType::LSR;
        case PathType::LSL: return PathType::RSR;
        case PathType::LSR: return PathType::RSL;
    }
    return t;
}

/// An interception instance in an arbitrary world frame. The target line is
/// given as a point plus the compass angle of its forward direction; the
/// forward direction defines which side is "left".
struct WorldProblem {
    double start_x = 0.0;
    double start_y = 0.0;
    double start_heading = 0.0;  ///< compass, radians
    double final_heading = 0.0;  ///< compass, radians
    double line_point_x = 0.0;
    double line_point_y = 0.0;
    double line_direction = 0.0;  ///< compass angle of the line's forward direction
    double turn_radius = 0.0;     ///< > 0
};

/// Normalized instance: start pose at the origin, target line vertical at
/// x = d with forward direction +y, start on the left of the line.
struct CanonicalProblem {
    double d = 0.0;      ///< perpendicular distance to the line, > 0
    double r = 0.0;      ///< turn radius, > 0
    double psi_i = 0.0;  ///< initial heading, [0, 2*pi)
    double psi_f = 0.0;  ///< final heading, [0, 2*pi)

    /// Validating factory; normalizes headings and enforces d >= 4r.
    [[nodiscard]] static CanonicalProblem make(double d, double r, double psi_i,
                                               double psi_f);

    /// Throws unless finite, r > 0 and d >= 4r.
    void validate() const;
};

/// Rigid transform (plus optional mirror) between the world frame and the
/// canonical frame. Canonical coordinates are obtained by translating, then
/// rotating, then (if mirrored) reflecting across the canonical y-axis.
struct FrameTransform {
    double rotation = 0.0;  ///< Cartesian CCW rotation applied after translation
    Vec2 translation{0.0, 0.0};
    bool mirrored = false;

    [[nodiscard]] Vec2 to_canonical(Vec2 world_point) const noexcept;
    [[nodiscard]] Vec2 to_world(Vec2 canonical_point) const noexcept;
    [[nodiscard]] double heading_to_canonical(double world_heading) const;
    [[nodiscard]] double heading_to_world(double canonical_heading) const;
};

/// Build the canonical instance for a world-frame problem. If the start pose
/// lies on the right of the directed line the frame is mirrored and turn
/// handedness swaps; map results back through the returned transform.
///
/// Throws ErrorCode::degenerate_instance when the start lies on the line,
/// OutOfValidityError when the perpendicular distance is below 4r.
[[nodiscard]] std::pair<CanonicalProblem, FrameTransform> make_canonical(
    const WorldProblem& world);

}  // namespace dubline
