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

// Brute-force cross-checks for the closed-form planner. The grid search is
// intentionally naive (uniform sampling of the length functions) so that it
// stays an independent oracle for the analytic results.

#include <cstdint>
#include <string>
#include <vector>

#include "dubline/geometry.hpp"
#include "dubline/optimizer.hpp"

namespace dubline {

struct OracleTolerances {
    double length_gap = 1e-2;     ///< max |closed-form best - grid best|, units of r
    double stationarity = 1e-4;   ///< max |dL/dy| at a closed-form optimum
    double fd_step = 1e-6;        ///< finite-difference step, units of r
    double boundary_cos = 1e-3;   ///< skip decision checks with |cos psi| below this
};

struct OracleFailure {
    CanonicalProblem problem;
    std::string detail;
};

struct OracleReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t grid_points = 0;
    double max_length_gap = 0.0;             ///< worst |closed best - grid best|
    double max_stationarity_residual = 0.0;  ///< worst |dL/dy| at an optimum
    double max_grid_slope = 0.0;             ///< empirical Lipschitz constant K
    std::uint64_t decision_mismatches = 0;
    std::vector<OracleFailure> failures;

    [[nodiscard]] bool passed() const noexcept {
        return failures.empty() && decision_mismatches == 0;
    }
};

/// Evaluate all four length functions on a uniform intercept grid over
/// [-Y, +Y], where Y is the best closed-form length (no longer path can pass
/// through a more distant intercept: the chord alone would exceed it).
/// Returns the grid minimizer. Requires n_points >= 1000; validates p.
[[nodiscard]] Candidate grid_search(const CanonicalProblem& p, std::size_t n_points);

/// Central difference (L(y+h) - L(y-h)) / (2h) of one type's length, as a
/// dimensionless slope. Throws ErrorCode::invalid_argument when a branch
/// discontinuity (length jump >= pi*r) lies inside [y-h, y+h].
[[nodiscard]] double finite_diff(const CanonicalProblem& p, PathType t, double y_f,
                                 double h);

/// Run seeded random trials (psi_i, psi_f uniform in [0, 2*pi), d uniform in
/// [4, 20], r = 1): grid search vs. closed form, stationarity at each
/// closed-form optimum, and decision-table agreement away from the quadrant
/// boundaries. Deterministic for a fixed (seed, trials, grid_points); trial
/// RNG streams are derived per trial with SplitMix64, so aggregation is
/// order-independent. Failures are collected, never thrown.
[[nodiscard]] OracleReport verify(std::uint64_t trials, std::uint64_t seed,
                                  std::size_t grid_points,
                                  const OracleTolerances& tol = {});

}  // namespace dubline
