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

#include <optional>

#include "dubline/geometry.hpp"
#include "dubline/types.hpp"

namespace dubline {

/// Centers of the four candidate turn circles for a canonical instance and a
/// line intercept y_f. (a_*, b_*) belong to the start pose at the origin,
/// (c_*, d_*) to the terminal pose (d, y_f); suffix _r/_l picks the circle on
/// the right/left of the heading.
struct CircleCenters {
    double a_r, b_r;  ///< initial right-turn center
    double a_l, b_l;  ///< initial left-turn center
    double c_r, d_r;  ///< final right-turn center
    double c_l, d_l;  ///< final left-turn center
};

[[nodiscard]] CircleCenters turn_centers(const CanonicalProblem& p, double y_f) noexcept;

/// Full evaluation of one path type at one intercept. All intermediate
/// quantities are kept so tests and tools can introspect the construction.
struct PathEval {
    PathType path_type;
    double y_f;    ///< intercept on the target line
    double l_cc;   ///< distance between the two active circle centers
    double l_s;    ///< straight-segment length
    double theta1; ///< compass orientation of the straight segment, in (0, pi)
    std::optional<double> theta2;  ///< tangent-triangle interior angle (RSL/LSR)
    std::optional<double> gamma;   ///< Cartesian slope of the center line (RSL/LSR)
    double alpha;  ///< initial turn magnitude, [0, 2*pi)
    double beta;   ///< final turn magnitude, [0, 2*pi)
    double total;  ///< l_s + r * (alpha + beta)
};

// Per-type length evaluation at an arbitrary intercept. Preconditions: p
// valid (not re-checked here; the entry-level APIs validate), y_f finite.
// RSL/LSR throw ErrorCode::infeasible_tangent if the circles overlap; with
// d >= 4r that cannot happen and the guard is purely defensive.
[[nodiscard]] PathEval length_rsr(const CanonicalProblem& p, double y_f);
[[nodiscard]] PathEval length_rsl(const CanonicalProblem& p, double y_f);
[[nodiscard]] PathEval length_lsl(const CanonicalProblem& p, double y_f);
[[nodiscard]] PathEval length_lsr(const CanonicalProblem& p, double y_f);

/// Dispatch on path type.
[[nodiscard]] PathEval evaluate(const CanonicalProblem& p, PathType t, double y_f);

}  // namespace dubline
