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

#include "dubline/optimizer.hpp"

#include <cmath>
#include <numbers>

#include "dubline/error.hpp"

namespace dubline {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

Candidate extreme_candidate(const CanonicalProblem& p, PathType t) {
    // At each extreme the straight segment is normal to the target line, so
    // the straight part reduces to d plus the circle-center offsets and each
    // arc spans the turn from its heading to (or from) pi/2.
    const double r = p.r;
    const double ci = r * std::cos(p.psi_i);
    const double cf = r * std::cos(p.psi_f);
    const double si = r * std::sin(p.psi_i);
    const double sf = r * std::sin(p.psi_f);

    double y = 0.0;
    double l = 0.0;
    switch (t) {
        case PathType::RSR:
            y = -si + sf;
            l = (p.d - ci + cf) + r * normalize_turn(kHalfPi - p.psi_i) +
                r * normalize_turn(p.psi_f - kHalfPi);
            break;
        case PathType::RSL:
            y = -si - sf + 2.0 * r;
            l = (p.d - ci - cf) + r * normalize_turn(kHalfPi - p.psi_i) +
                r * normalize_turn(kHalfPi - p.psi_f);
            break;
        case PathType::LSL:
            y = si - sf;
            l = (p.d + ci - cf) + r * normalize_turn(p.psi_i - kHalfPi) +
                r * normalize_turn(kHalfPi - p.psi_f);
            break;
        case PathType::LSR:
            y = si + sf - 2.0 * r;
            l = (p.d + ci + cf) + r * normalize_turn(p.psi_i - kHalfPi) +
                r * normalize_turn(p.psi_f - kHalfPi);
            break;
    }
    return Candidate{t, y, l};
}

PlanResult optimal_path(const CanonicalProblem& p) {
    p.validate();
    PlanResult res;
    res.problem = p;
    std::size_t best = 0;
    for (std::size_t i = 0; i < kAllPathTypes.size(); ++i) {
        res.all_candidates[i] = extreme_candidate(p, kAllPathTypes[i]);
        if (res.all_candidates[i].length < res.all_candidates[best].length) {
            best = i;
        }
    }
    res.best = res.all_candidates[best];
    return res;
}

PathType decision_table_lookup(double psi_i, double psi_f) {
    if (!std::isfinite(psi_i) || !std::isfinite(psi_f)) {
        throw Error(ErrorCode::invalid_argument, "headings must be finite");
    }
    const double ci = std::cos(psi_i);
    const double cf = std::cos(psi_f);
    if (std::abs(ci) <= 1e-12 || std::abs(cf) <= 1e-12) {
        throw Error(ErrorCode::boundary_heading,
                    "heading on a quadrant boundary: the table is undefined "
                    "there (adjacent types tie); use optimal_path");
    }
    const bool first_right = ci > 0.0;
    const bool last_left = cf > 0.0;
    if (first_right) {
        return last_left ? PathType::RSL : PathType::RSR;
    }
    return last_left ? PathType::LSL : PathType::LSR;
}

}  // namespace dubline
