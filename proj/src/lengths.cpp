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

#include "dubline/lengths.hpp"

#include <cmath>
#include <numbers>

#include "dubline/error.hpp"

namespace dubline {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_finite_intercept(double y_f) {
    if (!std::isfinite(y_f)) {
        throw Error(ErrorCode::invalid_argument, "intercept y_f must be finite");
    }
}

// Straight length of the internal tangent between two circles of radius r
// whose centers are l_cc apart. With d >= 4r the center distance never drops
// below 2r; tiny negative radicands from rounding are clamped, real overlaps
// are rejected.
double internal_tangent_length(double l_cc, double r) {
    const double s2 = l_cc * l_cc - 4.0 * r * r;
    if (s2 < 0.0) {
        if (l_cc < 2.0 * r * (1.0 - 1e-9)) {
            throw Error(ErrorCode::infeasible_tangent,
                        "turn circles overlap: center distance " +
                            std::to_string(l_cc) + " < 2r = " +
                            std::to_string(2.0 * r));
        }
        return 0.0;
    }
    return std::sqrt(s2);
}

}  // namespace

CircleCenters turn_centers(const CanonicalProblem& p, double y_f) noexcept {
    const double ci = std::cos(p.psi_i);
    const double si = std::sin(p.psi_i);
    const double cf = std::cos(p.psi_f);
    const double sf = std::sin(p.psi_f);
    return CircleCenters{
        p.r * ci,        -p.r * si,        // initial right
        -p.r * ci,       p.r * si,         // initial left
        p.d + p.r * cf,  y_f - p.r * sf,   // final right
        p.d - p.r * cf,  y_f + p.r * sf,   // final left
    };
}

PathEval length_rsr(const CanonicalProblem& p, double y_f) {
    require_finite_intercept(y_f);
    const CircleCenters cc = turn_centers(p, y_f);
    const double dx = cc.c_r - cc.a_r;  // >= d - 2r > 0, so theta1 stays in (0, pi)
    const double dy = cc.d_r - cc.b_r;
    const double l_cc = std::hypot(dx, dy);
    const double l_s = l_cc;  // external tangent of equal circles
    const double theta1 = kHalfPi - std::atan2(dy, dx);
    const double alpha = normalize_turn(theta1 - p.psi_i);
    const double beta = normalize_turn(p.psi_f - theta1);
    return PathEval{PathType::RSR, y_f,     l_cc,  l_s,
                    theta1,        std::nullopt, std::nullopt,
                    alpha,         beta,    l_s + p.r * (alpha + beta)};
}

PathEval length_rsl(const CanonicalProblem& p, double y_f) {
    require_finite_intercept(y_f);
    const CircleCenters cc = turn_centers(p, y_f);
    const double dx = cc.c_l - cc.a_r;
    const double dy = cc.d_l - cc.b_r;
    const double l_cc = std::hypot(dx, dy);
    const double l_s = internal_tangent_length(l_cc, p.r);
    const double theta2 = std::atan2(l_s / 2.0, p.r);
    const double gamma = std::atan2(dy, dx);
    const double theta1 = std::numbers::pi - (theta2 + gamma);
    const double alpha = normalize_turn(theta1 - p.psi_i);
    const double beta = normalize_turn(theta1 - p.psi_f);
    return PathEval{PathType::RSL, y_f,   l_cc, l_s, theta1, theta2, gamma,
                    alpha,         beta,  l_s + p.r * (alpha + beta)};
}

PathEval length_lsl(const CanonicalProblem& p, double y_f) {
    require_finite_intercept(y_f);
    const CircleCenters cc = turn_centers(p, y_f);
    const double dx = cc.c_l - cc.a_l;
    const double dy = cc.d_l - cc.b_l;
    const double l_cc = std::hypot(dx, dy);
    const double l_s = l_cc;
    const double theta1 = kHalfPi - std::atan2(dy, dx);
    const double alpha = normalize_turn(p.psi_i - theta1);
    const double beta = normalize_turn(theta1 - p.psi_f);
    return PathEval{PathType::LSL, y_f,     l_cc,  l_s,
                    theta1,        std::nullopt, std::nullopt,
                    alpha,         beta,    l_s + p.r * (alpha + beta)};
}

PathEval length_lsr(const CanonicalProblem& p, double y_f) {
    require_finite_intercept(y_f);
    const CircleCenters cc = turn_centers(p, y_f);
    const double dx = cc.c_r - cc.a_l;
    const double dy = cc.d_r - cc.b_l;
    const double l_cc = std::hypot(dx, dy);
    const double l_s = internal_tangent_length(l_cc, p.r);
    const double theta2 = std::atan2(l_s / 2.0, p.r);
    const double gamma = std::atan2(dy, dx);
    const double theta1 = theta2 - gamma;
    const double alpha = normalize_turn(p.psi_i - theta1);
    const double beta = normalize_turn(p.psi_f - theta1);
    return PathEval{PathType::LSR, y_f,   l_cc, l_s, theta1, theta2, gamma,
                    alpha,         beta,  l_s + p.r * (alpha + beta)};
}

PathEval evaluate(const CanonicalProblem& p, PathType t, double y_f) {
    switch (t) {
        case PathType::RSR: return length_rsr(p, y_f);
        case PathType::RSL: return length_rsl(p, y_f);
        case PathType::LSL: return length_lsl(p, y_f);
        case PathType::LSR: return length_lsr(p, y_f);
    }
    throw Error(ErrorCode::invalid_argument, "unknown path type");
}

}  // namespace dubline
