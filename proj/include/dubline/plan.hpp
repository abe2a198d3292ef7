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

#include <vector>

#include "dubline/geometry.hpp"
#include "dubline/optimizer.hpp"
#include "dubline/pathgen.hpp"

namespace dubline {

/// A complete plan: canonical solution plus everything needed to express it
/// in the caller's world frame.
struct WorldPlan {
    WorldProblem world;          ///< input echo
    CanonicalProblem canonical;
    FrameTransform transform;
    PlanResult result;           ///< canonical-frame candidates and best
    PathType world_best_type;    ///< best type with world handedness
    SegmentList world_segments;  ///< executable path in the world frame
};

/// Canonicalize, optimize, and build the executable path.
[[nodiscard]] WorldPlan plan_world(const WorldProblem& world);

/// Plan an already-canonical instance (identity transform).
[[nodiscard]] WorldPlan plan_canonical(double d, double r, double psi_i, double psi_f);

/// World-frame waypoints of the planned path.
[[nodiscard]] std::vector<Waypoint> world_waypoints(const WorldPlan& plan,
                                                    double max_spacing);

/// World-frame label for a canonical-frame path type under this plan's
/// transform (mirrored frames swap handedness).
[[nodiscard]] PathType world_type(const WorldPlan& plan, PathType canonical_type);

}  // namespace dubline
