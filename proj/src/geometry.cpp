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

#include "dubline/geometry.hpp"

#include <cmath>
#include <string>

#include "dubline/error.hpp"

namespace dubline {

namespace {

constexpr double kTurnSnap = 1e-12;  // rad; see normalize_turn

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw Error(ErrorCode::invalid_argument,
                    std::string(name) + " must be finite");
    }
}

}  // namespace

double normalize_angle(double theta) {
    require_finite(theta, "angle");
    double y = std::fmod(theta, kTwoPi);
    if (y < 0.0) y += kTwoPi;
    // adding 2*pi to a tiny negative can round up to exactly 2*pi
    if (y >= kTwoPi) y = 0.0;
    return y;
}

double normalize_turn(double theta) {
    double y = normalize_angle(theta);
    if (y < kTurnSnap || kTwoPi - y < kTurnSnap) y = 0.0;
    return y;
}

CanonicalProblem CanonicalProblem::make(double d, double r, double psi_i,
                                        double psi_f) {
    CanonicalProblem p{d, r, normalize_angle(psi_i), normalize_angle(psi_f)};
    p.validate();
    return p;
}

void CanonicalProblem::validate() const {
    require_finite(d, "d");
    require_finite(r, "r");
    require_finite(psi_i, "psi_i");
    require_finite(psi_f, "psi_f");
    if (r <= 0.0) {
        throw Error(ErrorCode::invalid_argument, "turn radius must be positive");
    }
    if (d < 4.0 * r) {
        throw OutOfValidityError(d, 4.0 * r);
    }
}

Vec2 FrameTransform::to_canonical(Vec2 p) const noexcept {
    const double x = p[0] + translation[0];
    const double y = p[1] + translation[1];
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    double qx = c * x - s * y;
    const double qy = s * x + c * y;
    if (mirrored) qx = -qx;
    return {qx, qy};
}

Vec2 FrameTransform::to_world(Vec2 q) const noexcept {
    double qx = q[0];
    const double qy = q[1];
    if (mirrored) qx = -qx;
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    return {c * qx + s * qy - translation[0], -s * qx + c * qy - translation[1]};
}

double FrameTransform::heading_to_canonical(double psi) const {
    double h = normalize_angle(psi - rotation);
    if (mirrored) h = normalize_angle(-h);
    return h;
}

double FrameTransform::heading_to_world(double psi) const {
    double h = psi;
    if (mirrored) h = -h;
    return normalize_angle(h + rotation);
}

std::pair<CanonicalProblem, FrameTransform> make_canonical(const WorldProblem& w) {
    require_finite(w.start_x, "start_x");
    require_finite(w.start_y, "start_y");
    require_finite(w.start_heading, "start_heading");
    require_finite(w.final_heading, "final_heading");
    require_finite(w.line_point_x, "line_point_x");
    require_finite(w.line_point_y, "line_point_y");
    require_finite(w.line_direction, "line_direction");
    require_finite(w.turn_radius, "turn_radius");
    if (w.turn_radius <= 0.0) {
        throw Error(ErrorCode::invalid_argument, "turn radius must be positive");
    }

    // Signed perpendicular offset of the start from the directed line:
    // positive on the left of the forward direction (sin psi, cos psi).
    const double ux = std::sin(w.line_direction);
    const double uy = std::cos(w.line_direction);
    const double nx = -uy;  // left normal
    const double ny = ux;
    const double signed_d = (w.start_x - w.line_point_x) * nx +
                            (w.start_y - w.line_point_y) * ny;

    if (std::abs(signed_d) < 1e-12 * w.turn_radius) {
        throw Error(ErrorCode::degenerate_instance,
                    "start pose lies on the target line");
    }

    FrameTransform t;
    t.rotation = w.line_direction;
    t.translation = {-w.start_x, -w.start_y};
    t.mirrored = signed_d < 0.0;

    const double d = std::abs(signed_d);
    if (d < 4.0 * w.turn_radius) {
        throw OutOfValidityError(d, 4.0 * w.turn_radius);
    }

    CanonicalProblem p{d, w.turn_radius, t.heading_to_canonical(w.start_heading),
                       t.heading_to_canonical(w.final_heading)};
    return {p, t};
}

}  // namespace dubline
