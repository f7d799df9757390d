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
//
// Discrete-time flatness maps for the Euler-discretized multirotor models.
//
// A window of consecutive flat-output samples (position + yaw in 3-D,
// position in 2-D) determines the full state and the input of the
// discretized plant in closed form. All maps here are exact inverses of the
// corresponding model arithmetic: reconstructing from a substeps=1 rollout
// reproduces states and inputs to floating-point accuracy.
//
// Window sizes (number of samples consumed):
//   state_from_outputs_3d   4   (r-1 = 3 forward shifts)
//   input_from_outputs_3d   5   (r = 4 forward shifts)
//   state_from_outputs_2d   3
//   output_to_input_2d      4   (r = 3 forward shifts)
//   input_to_output_2d      3   (plus the input; yields the 4th sample)
//
// Every operation rejects windows of any other length.

#ifndef DFLAT_FLAT_MAPS_HPP_
#define DFLAT_FLAT_MAPS_HPP_

#include <span>

#include <Eigen/Dense>

#include "dflat/models.hpp"

namespace dflat {

// Steps smaller than this make second differences of measured positions
// numerically meaningless.
inline constexpr double kMinFlatMapDt = 1e-6;

// |t| at or below this is treated as the free-fall singularity.
inline constexpr double kZeroThrustEps = 1e-6;

/// Specific-force direction numerator from three consecutive 3-D samples:
///   t = [d2x/dt^2, d2y/dt^2, d2z/dt^2 + g]
/// where d2 is the second difference over the window. t/|t| equals the third
/// column of the body-to-inertial rotation at the first sample. Throws
/// ZeroThrustError when |t| <= eps.
Eigen::Vector3d thrust_vector(std::span<const OutputSample3D> window,
                              double dt, double gravity,
                              double eps = kZeroThrustEps);

/// Full 12-component state at the first sample of a 4-sample window.
State3D state_from_outputs_3d(std::span<const OutputSample3D> window,
                              double dt, const Params3D& params);

/// Thrust and torques applied at the first sample of a 5-sample window.
/// This is the 3-D output-to-input map: T = m|t|, torques from the inverted
/// discrete rotational dynamics using body rates at consecutive steps.
Input3D input_from_outputs_3d(std::span<const OutputSample3D> window,
                              double dt, const Params3D& params);

/// 2-D state at the first sample of a 3-sample window. Pitch and roll follow
/// from the second-difference ratios d2/(g dt^2); total on the chart.
State2D state_from_outputs_2d(std::span<const Eigen::Vector2d> window,
                              double dt, const Params2D& params);

/// Output-to-input map F: commands applied at the first sample of a
/// 4-sample window, via the exact inverse of the Euler-discretized
/// first-order attitude dynamics.
Input2D output_to_input_2d(std::span<const Eigen::Vector2d> window,
                           double dt, const Params2D& params);

/// Input-to-output map F^-1: the sample following a 3-sample window when
/// `input` is applied at the window start. Satisfies
///   output_to_input_2d({w0, w1, w2, input_to_output_2d(w, u)}) == u.
/// Throws SingularAttitudeError if the propagated pitch or roll leaves
/// (-pi/2, pi/2).
Eigen::Vector2d input_to_output_2d(std::span<const Eigen::Vector2d> window,
                                   const Input2D& input, double dt,
                                   const Params2D& params);

// Trivial output map H: pure selection.
OutputSample3D flat_output_from_state(const State3D& state);
Eigen::Vector2d flat_output_from_state(const State2D& state);

}  // namespace dflat

#endif  // DFLAT_FLAT_MAPS_HPP_
