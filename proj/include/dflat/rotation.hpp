// Copyright 2026 The dflat Authors
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

#ifndef DFLAT_ROTATION_HPP_
#define DFLAT_ROTATION_HPP_

#include <Eigen/Dense>

namespace dflat {

// Default guard on R33 before dividing by it; below this the attitude is
// treated as outside the (-pi/2, pi/2) pitch/roll chart.
inline constexpr double kSingularAttitudeEps = 1e-6;

// Z-Y-X Euler angles, body to inertial: R = Rz(yaw) * Ry(pitch) * Rx(roll).
struct EulerAngles {
  double roll = 0.0;   // phi, rad, in (-pi/2, pi/2)
  double pitch = 0.0;  // theta, rad, in (-pi/2, pi/2)
  double yaw = 0.0;    // psi, rad
};

struct PitchRoll {
  double pitch = 0.0;
  double roll = 0.0;
};

// Body-to-inertial rotation matrix for the fixed Z-Y-X convention.
Eigen::Matrix3d rotation_from_euler(const EulerAngles& angles);

/// Recovers pitch and roll from the third column of a rotation matrix and a
/// known yaw. Only the ratios r13/r33 and r23/r33 enter, so the column does
/// not need to be normalized. Requires r33 > eps; throws
/// SingularAttitudeError otherwise.
PitchRoll euler_from_third_column(double r13, double r23, double r33,
                                  double yaw,
                                  double eps = kSingularAttitudeEps);

/// Body angular rates (p, q, r) from Euler-angle rates (roll_rate,
/// pitch_rate, yaw_rate), using the inertial angular-velocity matrix
///   M = [cos(yaw) R12 0; sin(yaw) R22 0; 0 R32 1]
/// so that [p q r]^T = R^T * M * [roll_rate pitch_rate yaw_rate]^T.
Eigen::Vector3d body_rates_from_euler_rates(const Eigen::Matrix3d& rotation,
                                            double yaw,
                                            const Eigen::Vector3d& euler_rates);

/// Exact inverse of body_rates_from_euler_rates: solves
/// M * [roll_rate pitch_rate yaw_rate]^T = R * [p q r]^T.
/// Throws SingularAttitudeError when M is singular (|det M| = cos(roll) too
/// small, i.e. the attitude left the chart).
Eigen::Vector3d euler_rates_from_body_rates(const Eigen::Matrix3d& rotation,
                                            double yaw,
                                            const Eigen::Vector3d& body_rates,
                                            double eps = kSingularAttitudeEps);

}  // namespace dflat

#endif  // DFLAT_ROTATION_HPP_
