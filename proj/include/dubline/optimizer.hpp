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

#include "dubline/geometry.hpp"
#include "dubline/types.hpp"

namespace dubline {

/// A path type together with its closed-form optimal intercept and length.
struct Candidate {
    PathType path_type;
    double y_f;     ///< optimal intercept, meters
    double length;  ///< path length at y_f, meters
};

struct PlanResult {
    Candidate best;
    std::array<Candidate, 4> all_candidates;  ///< order: RSR, RSL, LSL, LSR
    CanonicalProblem problem;
};

/// Closed-form extreme intercept and length for one path type. At the
/// returned intercept the straight segment is normal to the target line.
[[nodiscard]] Candidate extreme_candidate(const CanonicalProblem& p, PathType t);

/// Evaluate all four closed forms and take the minimum. Ties break by the
/// fixed order RSR, RSL, LSL, LSR. Validates p.
[[nodiscard]] PlanResult optimal_path(const CanonicalProblem& p);

/// Pick the optimal type directly from the heading pair: initial turn is R
/// when cos(psi_i) > 0, else L; final turn is L when cos(psi_f) > 0, else R.
/// Throws ErrorCode::boundary_heading when either cosine is within 1e-12 of
/// zero (adjacent types tie there; use optimal_path instead).
[[nodiscard]] PathType decision_table_lookup(double psi_i, double psi_f);

}  // namespace dubline
