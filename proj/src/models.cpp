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

#include "dflat/models.hpp"

#include <stdexcept>

#include "dflat/errors.hpp"

namespace dflat {

StateDerivative3D derivative_3d(const State3D& state, const Input3D& input,
                                const Params3D& params) {
  const Eigen::Matrix3d r = rotation_from_euler(state.attitude());

  StateDerivative3D d;
  d.position = state.velocity;
  d.velocity = (input.thrust / params.mass) * r.col(2) -
               Eigen::Vector3d(0.0, 0.0, params.gravity);

  // Euler-angle kinematics: invert the angular-velocity map so the plant is
  // exactly consistent with the flat-map reconstruction.
  const Eigen::Vector3d euler_rates =
      euler_rates_from_body_rates(r, state.yaw, state.body_rates);
  d.roll = euler_rates[0];
  d.pitch = euler_rates[1];
  d.yaw = euler_rates[2];

  const double ixx = params.inertia[0];
  const double iyy = params.inertia[1];
  const double izz = params.inertia[2];
  const double p = state.body_rates[0];
  const double q = state.body_rates[1];
  const double rr = state.body_rates[2];
  d.body_rates[0] = (-(izz - iyy) * q * rr + input.torque[0]) / ixx;
  d.body_rates[1] = (-(ixx - izz) * p * rr + input.torque[1]) / iyy;
  d.body_rates[2] = (-(iyy - ixx) * p * q + input.torque[2]) / izz;
  return d;
}

StateDerivative2D derivative_2d(const State2D& state, const Input2D& input,
                                const Params2D& params) {
  const Eigen::Matrix3d r =
      rotation_from_euler({state.roll, state.pitch, params.yaw});
  if (!(r(2, 2) > kSingularAttitudeEps)) {
    throw SingularAttitudeError("derivative_2d: R33 <= eps");
  }
  StateDerivative2D d;
  d.position = state.velocity;
  d.velocity[0] = params.gravity * r(0, 2) / r(2, 2);
  d.velocity[1] = params.gravity * r(1, 2) / r(2, 2);
  d.pitch = (params.gain * input.pitch_cmd - state.pitch) / params.time_constant;
  d.roll = (params.gain * input.roll_cmd - state.roll) / params.time_constant;
  return d;
}

State3D euler_step(const State3D& state, const Input3D& input,
                   const Params3D& params, double dt) {
  const StateDerivative3D d = derivative_3d(state, input, params);
  State3D next;
  next.position = state.position + dt * d.position;
  next.velocity = state.velocity + dt * d.velocity;
  next.pitch = state.pitch + dt * d.pitch;
  next.roll = state.roll + dt * d.roll;
  next.yaw = state.yaw + dt * d.yaw;
  next.body_rates = state.body_rates + dt * d.body_rates;
  return next;
}

State2D euler_step(const State2D& state, const Input2D& input,
                   const Params2D& params, double dt) {
  const StateDerivative2D d = derivative_2d(state, input, params);
  State2D next;
  next.position = state.position + dt * d.position;
  next.velocity = state.velocity + dt * d.velocity;
  next.pitch = state.pitch + dt * d.pitch;
  next.roll = state.roll + dt * d.roll;
  return next;
}

namespace {

template <typename State, typename Input, typename Params, typename Rollout,
          typename OutputFn>
Rollout rollout_impl(const State& initial, std::span<const Input> inputs,
                     const Params& params, double dt, int substeps,
                     OutputFn output_of) {
  if (substeps < 1) {
    throw std::invalid_argument("rollout: substeps must be >= 1");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("rollout: dt must be positive");
  }
  const double plant_dt = dt / substeps;

  Rollout out;
  out.states.reserve(inputs.size() * substeps + 1);
  out.outputs.reserve(inputs.size() + 1);

  State state = initial;
  out.states.push_back(state);
  out.outputs.push_back(output_of(state));
  for (const Input& input : inputs) {
    for (int s = 0; s < substeps; ++s) {
      state = euler_step(state, input, params, plant_dt);
      out.states.push_back(state);
    }
    out.outputs.push_back(output_of(state));
  }
  return out;
}

}  // namespace

Rollout3D rollout(const State3D& initial, std::span<const Input3D> inputs,
                  const Params3D& params, double dt, int substeps) {
  return rollout_impl<State3D, Input3D, Params3D, Rollout3D>(
      initial, inputs, params, dt, substeps, [](const State3D& s) {
        return OutputSample3D{s.position, s.yaw};
      });
}

Rollout2D rollout(const State2D& initial, std::span<const Input2D> inputs,
                  const Params2D& params, double dt, int substeps) {
  return rollout_impl<State2D, Input2D, Params2D, Rollout2D>(
      initial, inputs, params, dt, substeps,
      [](const State2D& s) { return s.position; });
}

}  // namespace dflat
