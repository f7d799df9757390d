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

#ifndef DFLAT_ERRORS_HPP_
#define DFLAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dflat {

// Attitude left the (-pi/2, pi/2) pitch/roll chart (R33 too close to zero).
class SingularAttitudeError : public std::runtime_error {
 public:
  explicit SingularAttitudeError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrust vector magnitude too close to zero (free-fall singularity); the
// flat maps are undefined there.
class ZeroThrustError : public std::runtime_error {
 public:
  explicit ZeroThrustError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dflat

#endif  // DFLAT_ERRORS_HPP_
