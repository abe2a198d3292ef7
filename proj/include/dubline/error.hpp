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

#include <stdexcept>
#include <string>

namespace dubline {

enum class ErrorCode {
    invalid_argument,     ///< non-finite or out-of-domain input
    out_of_validity,      ///< perpendicular distance below the 4r bound
    degenerate_instance,  ///< start pose lies on the target line
    boundary_heading,     ///< heading on a decision-table quadrant boundary
    infeasible_tangent,   ///< no internal tangent (center distance < 2r)
};

/// Library error; carries a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown when the instance violates the d >= 4r validity requirement.
/// Keeps both sides of the comparison for diagnostics.
class OutOfValidityError : public Error {
public:
    OutOfValidityError(double distance, double required)
        : Error(ErrorCode::out_of_validity,
                "perpendicular distance d=" + std::to_string(distance) +
                    " is below the validity bound 4r=" + std::to_string(required) +
                    " (require d >= 4r)"),
          distance_(distance),
          required_(required) {}

    [[nodiscard]] double distance() const noexcept { return distance_; }
    [[nodiscard]] double required() const noexcept { return required_; }

private:
    double distance_;
    double required_;
};

}  // namespace dubline
