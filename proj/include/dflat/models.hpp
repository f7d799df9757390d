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
// Euler-discretized multirotor plant models. The 3-D model carries the full
// twelve-component state; the 2-D model assumes a lower-level attitude loop
// with first-order pitch/roll response and a fixed yaw.

#ifndef DFLAT_MODELS_HPP_
#define DFLAT_MODELS_HPP_

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dflat/rotation.hpp"

namespace dflat {

// State [x, xd, y, yd, z, zd, theta, phi, psi, p, q, r].
struct State3D {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();   // m
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();   // m/s
  double pitch = 0.0;                                   // theta, rad
  double roll = 0.0;                                    // phi, rad
  double yaw = 0.0;                                     // psi, rad
  Eigen::Vector3d body_rates = Eigen::Vector3d::Zero(); // (p, q, r), rad/s

  EulerAngles attitude() const { return {roll, pitch, yaw}; }
};

struct Input3D {
  double thrust = 0.0;                                 // T, N
  Eigen::Vector3d torque = Eigen::Vector3d::Zero();    // (tau_x, tau_y, tau_z), N m
};

struct Params3D {
  double mass = 1.2;        // kg
  double gravity = 9.81;    // m/s^2
  Eigen::Vector3d inertia = Eigen::Vector3d(0.01, 0.012, 0.02);  // diagonal, kg m^2
};

// State [x, xd, y, yd, theta, phi].
struct State2D {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();  // m
  Eigen::Vector2d velocity = Eigen::Vector2d::Zero();  // m/s
  double pitch = 0.0;                                  // theta, rad
  double roll = 0.0;                                   // phi, rad
};

struct Input2D {
  double pitch_cmd = 0.0;  // rad
  double roll_cmd = 0.0;   // rad
};

struct Params2D {
  double time_constant = 0.3;  // tau, s
  double gain = 1.0;           // k tilde, dimensionless
  double yaw = 0.0;            // fixed psi*, rad
  double gravity = 9.81;       // m/s^2
};

// Same layout as the state; position slot holds velocity, velocity slot
// holds acceleration, and so on.
using StateDerivative3D = State3D;
using StateDerivative2D = State2D;

StateDerivative3D derivative_3d(const State3D& state, const Input3D& input,
                                const Params3D& params);

StateDerivative2D derivative_2d(const State2D& state, const Input2D& input,
                                const Params2D& params);

State3D euler_step(const State3D& state, const Input3D& input,
                   const Params3D& params, double dt);

State2D euler_step(const State2D& state, const Input2D& input,
                   const Params2D& params, double dt);

// Flat output sample: 3-D position plus yaw.
struct OutputSample3D {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double yaw = 0.0;
};

struct Rollout3D {
  std::vector<State3D> states;          // plant rate, length inputs*substeps + 1
  std::vector<OutputSample3D> outputs;  // input rate, length inputs + 1
};

struct Rollout2D {
  std::vector<State2D> states;
  std::vector<Eigen::Vector2d> outputs;
};

/// Integrates the plant under a zero-order-hold input sequence. `dt` is the
/// input interval; the plant runs `substeps` Euler steps of dt/substeps per
/// input. Flat outputs are sampled at the input rate, including the initial
/// and final samples. With substeps = 1 the trajectory is exactly the
/// Euler-discretized model at the input rate.
Rollout3D rollout(const State3D& initial, std::span<const Input3D> inputs,
                  const Params3D& params, double dt, int substeps);

Rollout2D rollout(const State2D& initial, std::span<const Input2D> inputs,
                  const Params2D& params, double dt, int substeps);

}  // namespace dflat

#endif  // DFLAT_MODELS_HPP_
