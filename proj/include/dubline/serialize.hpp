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
#include <string>

#include "dubline/oracle.hpp"
#include "dubline/pathgen.hpp"
#include "dubline/plan.hpp"

namespace dubline {

/// Plan document: path_type, y_opt, length, the four candidates, segments,
/// and waypoints sampled at max_spacing. Angles appear in both degrees and
/// radians; numbers keep full round-trip precision.
[[nodiscard]] std::string plan_to_json(const WorldPlan& plan, double max_spacing);

/// Waypoint table with header "x,y,heading_deg,s", '.' decimal separator,
/// '\n' newlines.
[[nodiscard]] std::string waypoints_to_csv(std::span<const Waypoint> wps);

/// SVG picture of the plan: target line, the arc-line-arc path, the two
/// active turn circles (dashed), start/end markers, and a short annotation
/// with type, y_opt and length. The viewBox encloses all geometry with a 10%
/// margin. Zero-sweep arcs are dropped from the path element.
[[nodiscard]] std::string render_svg(const WorldPlan& plan, double max_spacing);

/// Verification report as JSON (stable key order, reproducible bytes).
[[nodiscard]] std::string report_to_json(const OracleReport& report);

}  // namespace dubline
