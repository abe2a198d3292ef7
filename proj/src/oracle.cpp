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

#include "dubline/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dubline/error.hpp"
#include "dubline/lengths.hpp"

namespace dubline {

namespace {

// SplitMix64 (Steele, Lea, Flood 2014): tiny, seedable, identical on every
// platform. Each trial gets its own stream so trials can run in any order.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() noexcept {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53 bits
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct GridScan {
    Candidate minimizer;
    double max_slope;  // over jump-free adjacent pairs
};

// Uniform scan of all four length functions over [-reach, reach].
GridScan scan_grid(const CanonicalProblem& p, double reach, std::size_t n_points) {
    const double step = 2.0 * reach / static_cast<double>(n_points - 1);
    const double jump_threshold = std::numbers::pi * p.r;

    GridScan out{Candidate{PathType::RSR, 0.0, std::numeric_limits<double>::infinity()},
                 0.0};
    std::array<double, 4> prev{};
    for (std::size_t j = 0; j < n_points; ++j) {
        const double y = -reach + step * static_cast<double>(j);
        for (std::size_t k = 0; k < kAllPathTypes.size(); ++k) {
            const double len = evaluate(p, kAllPathTypes[k], y).total;
            if (len < out.minimizer.length) {
                out.minimizer = Candidate{kAllPathTypes[k], y, len};
            }
            if (j > 0) {
                const double dl = std::abs(len - prev[k]);
                if (dl < jump_threshold) {
                    out.max_slope = std::max(out.max_slope, dl / step);
                }
            }
            prev[k] = len;
        }
    }
    return out;
}

double search_reach(const PlanResult& plan) {
    // Any path through intercept y is at least |y| long (chord bound), so no
    // intercept beyond the best closed-form length can improve on it.
    return plan.best.length;
}

}  // namespace

Candidate grid_search(const CanonicalProblem& p, std::size_t n_points) {
    p.validate();
    if (n_points < 1000) {
        throw Error(ErrorCode::invalid_argument,
                    "grid_search needs at least 1000 points");
    }
    return scan_grid(p, search_reach(optimal_path(p)), n_points).minimizer;
}

double finite_diff(const CanonicalProblem& p, PathType t, double y_f, double h) {
    if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(y_f)) {
        throw Error(ErrorCode::invalid_argument,
                    "finite_diff needs finite y_f and h > 0");
    }
    const double lo = evaluate(p, t, y_f - h).total;
    const double mid = evaluate(p, t, y_f).total;
    const double hi = evaluate(p, t, y_f + h).total;
    const double jump_threshold = std::numbers::pi * p.r;
    if (std::abs(hi - mid) >= jump_threshold || std::abs(mid - lo) >= jump_threshold) {
        throw Error(ErrorCode::invalid_argument,
                    "finite_diff straddles a branch discontinuity at y_f = " +
                        std::to_string(y_f));
    }
    return (hi - lo) / (2.0 * h);
}

OracleReport verify(std::uint64_t trials, std::uint64_t seed, std::size_t grid_points,
                    const OracleTolerances& tol) {
    if (trials < 1) {
        throw Error(ErrorCode::invalid_argument, "verify needs at least one trial");
    }
    if (grid_points < 1000) {
        throw Error(ErrorCode::invalid_argument,
                    "verify needs at least 1000 grid points");
    }

    OracleReport report;
    report.trials = trials;
    report.seed = seed;
    report.grid_points = grid_points;

    const double r = 1.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        // derive an independent stream per trial
        SplitMix64 rng{seed + (i + 1) * 0x9E3779B97F4A7C15ull};
        const double psi_i = rng.unit() * kTwoPi;
        const double psi_f = rng.unit() * kTwoPi;
        const double d = 4.0 * r + (20.0 - 4.0) * r * rng.unit();
        const CanonicalProblem p{d, r, psi_i, psi_f};

        const PlanResult plan = optimal_path(p);
        const double reach = search_reach(plan);
        const GridScan scan = scan_grid(p, reach, grid_points);
        report.max_grid_slope = std::max(report.max_grid_slope, scan.max_slope);

        const double gap = std::abs(plan.best.length - scan.minimizer.length);
        report.max_length_gap = std::max(report.max_length_gap, gap);
        if (gap > tol.length_gap * r) {
            report.failures.push_back(
                {p, "length gap " + std::to_string(gap) + " exceeds tolerance"});
        }
        const double spacing = 2.0 * reach / static_cast<double>(grid_points - 1);
        if (gap > 2.0 * spacing * scan.max_slope + 1e-9) {
            report.failures.push_back(
                {p, "length gap " + std::to_string(gap) +
                        " exceeds the 2*spacing*K bound"});
        }
        // the grid samples the true functions, so it can never beat the min
        if (scan.minimizer.length < plan.best.length - 1e-9) {
            report.failures.push_back(
                {p, "grid found a path below the closed-form optimum: " +
                        std::to_string(scan.minimizer.length)});
        }

        for (const Candidate& c : plan.all_candidates) {
            try {
                const double slope =
                    std::abs(finite_diff(p, c.path_type, c.y_f, tol.fd_step * r));
                report.max_stationarity_residual =
                    std::max(report.max_stationarity_residual, slope);
                if (slope > tol.stationarity) {
                    report.failures.push_back(
                        {p, std::string(to_string(c.path_type)) +
                                " optimum is not stationary: |dL/dy| = " +
                                std::to_string(slope)});
                }
            } catch (const Error& e) {
                report.failures.push_back(
                    {p, std::string("stationarity check failed: ") + e.what()});
            }
        }

        if (std::abs(std::cos(psi_i)) > tol.boundary_cos &&
            std::abs(std::cos(psi_f)) > tol.boundary_cos) {
            if (decision_table_lookup(psi_i, psi_f) != plan.best.path_type) {
                ++report.decision_mismatches;
            }
        }
    }
    return report;
}

}  // namespace dubline
