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

#include "dflat/rotation.hpp"

#include <cmath>

#include "dflat/errors.hpp"

namespace dflat {

Eigen::Matrix3d rotation_from_euler(const EulerAngles& angles) {
  const double cphi = std::cos(angles.roll);
  const double sphi = std::sin(angles.roll);
  const double cth = std::cos(angles.pitch);
  const double sth = std::sin(angles.pitch);
  const double cpsi = std::cos(angles.yaw);
  const double spsi = std::sin(angles.yaw);

  Eigen::Matrix3d r;
  r << cpsi * cth, cpsi * sth * sphi - spsi * cphi, cpsi * sth * cphi + spsi * sphi,
       spsi * cth, spsi * sth * sphi + cpsi * cphi, spsi * sth * cphi - cpsi * sphi,
       -sth,       cth * sphi,                      cth * cphi;
  return r;
}

PitchRoll euler_from_third_column(double r13, double r23, double r33,
                                  double yaw, double eps) {
  if (!(r33 > eps)) {
    throw SingularAttitudeError(
        "euler_from_third_column: r33 <= eps, attitude outside the "
        "(-pi/2, pi/2) chart");
  }
  const double a = r13 / r33;
  const double b = r23 / r33;
  const double cpsi = std::cos(yaw);
  const double spsi = std::sin(yaw);

  PitchRoll out;
  out.pitch = std::atan(a * cpsi + b * spsi);
  out.roll = std::atan((a * spsi - b * cpsi) * std::cos(out.pitch));
  return out;
}

Eigen::Vector3d body_rates_from_euler_rates(
    const Eigen::Matrix3d& rotation, double yaw,
    const Eigen::Vector3d& euler_rates) {
  Eigen::Matrix3d m;
  m << std::cos(yaw), rotation(0, 1), 0.0,
       std::sin(yaw), rotation(1, 1), 0.0,
       0.0,           rotation(2, 1), 1.0;
  return rotation.transpose() * (m * euler_rates);
}

Eigen::Vector3d euler_rates_from_body_rates(const Eigen::Matrix3d& rotation,
                                            double yaw,
                                            const Eigen::Vector3d& body_rates,
                                            double eps) {
  const double a = std::cos(yaw);
  const double b = rotation(0, 1);
  const double c = std::sin(yaw);
  const double d = rotation(1, 1);
  const double e = rotation(2, 1);
  const double det = a * d - b * c;  // equals cos(roll) for on-chart attitudes
  if (!(std::abs(det) > eps)) {
    throw SingularAttitudeError(
        "euler_rates_from_body_rates: angular-velocity matrix singular");
  }
  const Eigen::Vector3d omega = rotation * body_rates;
  Eigen::Vector3d rates;
  rates[0] = (d * omega[0] - b * omega[1]) / det;
  rates[1] = (a * omega[1] - c * omega[0]) / det;
  rates[2] = omega[2] - e * rates[1];
  return rates;
}

}  // namespace dflat
