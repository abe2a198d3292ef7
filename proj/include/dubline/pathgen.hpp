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

#include <span>
#include <vector>

#include "dubline/geometry.hpp"
#include "dubline/optimizer.hpp"
#include "dubline/types.hpp"

namespace dubline {

enum class Handedness : std::uint8_t { right, left };

struct ArcSegment {
    Vec2 center{0.0, 0.0};
    double radius = 0.0;
    double entry_heading = 0.0;  ///< compass heading at arc entry
    double sweep = 0.0;          ///< turn magnitude, >= 0; 0 means empty arc
    Handedness hand = Handedness::right;
};

struct StraightSegment {
    Vec2 start{0.0, 0.0};
    Vec2 end{0.0, 0.0};
};

/// Executable arc-line-arc path. Zero-sweep arcs are kept so the shape is
/// always three segments.
struct SegmentList {
    ArcSegment first_arc;
    StraightSegment straight;
    ArcSegment final_arc;
    double total_length = 0.0;
};

struct Waypoint {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;  ///< analytic tangent heading, radians
    double arc_length_from_start = 0.0;
};

/// Materialize a candidate as segments in the canonical frame. Works for any
/// (type, y_f) with a feasible tangent, not just optima.
[[nodiscard]] SegmentList build_segments(const CanonicalProblem& p, const Candidate& c);

/// Map segments through a frame transform (handedness flips when mirrored).
[[nodiscard]] SegmentList to_world(const SegmentList& s, const FrameTransform& t);

/// Sample poses along the path with consecutive arc-length spacing at most
/// max_spacing. Segment joints are always included exactly; headings are
/// analytic, not differenced. Throws on max_spacing <= 0.
[[nodiscard]] std::vector<Waypoint> sample_waypoints(const SegmentList& s,
                                                     double max_spacing);

/// Sum of consecutive chord lengths. Requires at least two waypoints.
[[nodiscard]] double polyline_length(std::span<const Waypoint> wps);

}  // namespace dubline
