/* Copyright 2026 The dubline Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the dubline shared library.
 *
 * dubline computes minimum-length Dubins paths (bounded-curvature arc-line-
 * arc paths) from a start pose to an infinite target line with prescribed
 * start and final headings.
 *
 * Conventions:
 *   - Headings are compass angles in radians: measured clockwise from the
 *     +y axis, so the unit velocity vector is (sin psi, cos psi). The target
 *     line's forward direction uses the same convention and defines which
 *     side of the line is "left".
 *   - All functions returning dubline_status report DUBLINE_OK on success.
 *     On failure, dubline_last_error() returns a thread-local one-line
 *     diagnostic (valid until the next failing call on the same thread).
 *   - Objects created by dubline_plan_* must be released with
 *     dubline_plan_free; strings with dubline_string_free.
 */

#ifndef DUBLINE_H
#define DUBLINE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DUBLINE_API __declspec(dllexport)
#else
#define DUBLINE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dubline_status {
    DUBLINE_OK = 0,
    DUBLINE_ERR_INVALID_ARGUMENT = 1,   /* non-finite / out-of-domain input */
    DUBLINE_ERR_OUT_OF_VALIDITY = 2,    /* perpendicular distance below 4r  */
    DUBLINE_ERR_DEGENERATE_INSTANCE = 3,/* start pose on the target line    */
    DUBLINE_ERR_BOUNDARY_HEADING = 4,   /* decision table undefined here    */
    DUBLINE_ERR_INFEASIBLE_TANGENT = 5, /* circles overlap, no tangent      */
    DUBLINE_ERR_INTERNAL = 6
} dubline_status;

typedef enum dubline_path_type {
    DUBLINE_RSR = 0,
    DUBLINE_RSL = 1,
    DUBLINE_LSL = 2,
    DUBLINE_LSR = 3
} dubline_path_type;

typedef struct dubline_waypoint {
    double x;
    double y;
    double heading_rad; /* compass heading, radians */
    double arc_length;  /* distance along the path from the start */
} dubline_waypoint;

/* Opaque plan handle. */
typedef struct dubline_plan dubline_plan;

/* Plan from a world-frame pose to a target line given as point + forward
 * direction. Fails with DUBLINE_ERR_OUT_OF_VALIDITY when the perpendicular
 * distance to the line is below four turn radii, and with
 * DUBLINE_ERR_DEGENERATE_INSTANCE when the start lies on the line. */
DUBLINE_API dubline_status dubline_plan_to_line(
    double start_x, double start_y, double start_heading_rad,
    double final_heading_rad, double line_point_x, double line_point_y,
    double line_direction_rad, double turn_radius, dubline_plan** out_plan);

/* Plan a canonical instance: start pose at the origin, target line vertical
 * at x = d with forward direction +y. */
DUBLINE_API dubline_status dubline_plan_canonical(double d, double turn_radius,
                                                  double psi_i_rad, double psi_f_rad,
                                                  dubline_plan** out_plan);

DUBLINE_API void dubline_plan_free(dubline_plan* plan);

/* Optimal type (world handedness), intercept offset along the line from the
 * foot of the perpendicular, and path length. Output pointers may be NULL. */
DUBLINE_API dubline_status dubline_plan_best(const dubline_plan* plan,
                                             dubline_path_type* out_type,
                                             double* out_y_opt, double* out_length);

/* Per-type closed-form optimum. `type` uses world handedness. */
DUBLINE_API dubline_status dubline_plan_candidate(const dubline_plan* plan,
                                                  dubline_path_type type,
                                                  double* out_y, double* out_length);

/* Waypoint sampling at arc-length spacing <= max_spacing (two-call pattern:
 * query the count, then fill a caller-owned buffer). */
DUBLINE_API dubline_status dubline_plan_waypoint_count(const dubline_plan* plan,
                                                       double max_spacing,
                                                       size_t* out_count);
DUBLINE_API dubline_status dubline_plan_waypoints(const dubline_plan* plan,
                                                  double max_spacing,
                                                  dubline_waypoint* buffer,
                                                  size_t capacity, size_t* out_written);

/* Render the plan as a document; *out receives a NUL-terminated string owned
 * by the caller (free with dubline_string_free). */
DUBLINE_API dubline_status dubline_plan_render_json(const dubline_plan* plan,
                                                    double max_spacing, char** out);
DUBLINE_API dubline_status dubline_plan_render_csv(const dubline_plan* plan,
                                                   double max_spacing, char** out);
DUBLINE_API dubline_status dubline_plan_render_svg(const dubline_plan* plan,
                                                   double max_spacing, char** out);

DUBLINE_API void dubline_string_free(char* s);

/* Optimal type straight from the heading pair (no length comparison).
 * Fails with DUBLINE_ERR_BOUNDARY_HEADING when cos(psi) vanishes for either
 * heading; plan instead in that case. */
DUBLINE_API dubline_status dubline_decision_table(double psi_i_rad, double psi_f_rad,
                                                  dubline_path_type* out_type);

/* Run the built-in brute-force verification (seeded and reproducible).
 * *out_passed is 1 when every trial agreed within tolerances. The JSON
 * report is optional; pass NULL to skip it. */
DUBLINE_API dubline_status dubline_verify(uint64_t trials, uint64_t seed,
                                          uint64_t grid_points, int* out_passed,
                                          char** out_report_json);

DUBLINE_API const char* dubline_path_type_name(dubline_path_type type);
DUBLINE_API const char* dubline_status_name(dubline_status status);
DUBLINE_API const char* dubline_last_error(void);
DUBLINE_API const char* dubline_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DUBLINE_H */
