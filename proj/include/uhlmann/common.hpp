// Copyright 2026 The uhlmann-sim developers
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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace uhlmann {

inline constexpr double kPi = std::numbers::pi;

// Numerical guard bands; see the module documentation for their roles.
inline constexpr double kEpsGap = 1e-9;   // minimum band gap G before rejecting
inline constexpr double kEpsArg = 1e-9;   // overlap magnitude below which a phase is undefined
inline constexpr double kQuadAbsTol = 1e-10;
inline constexpr double kWindingRoundTol = 1e-3;

/// Band gap closed at the requested parameter point.
struct GapClosureError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The fixed eigenstate gauge g(theta, M) is singular at this point.
struct SingularGaugeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

/// Ill-formed circuit (bad indices, non-finite angle, gate after measure, ...).
struct CircuitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Principal argument in (-pi, pi]; the branch point is reported as +pi.
inline double principal_arg(std::complex<double> z) {
  double a = std::arg(z);
  if (a <= -kPi) a = kPi;
  return a;
}

/// Circular distance |a - b| modulo 2*pi, in [0, pi].
inline double phase_distance(double a, double b) {
  double d = std::fmod(a - b, 2.0 * kPi);
  if (d > kPi) d -= 2.0 * kPi;
  if (d < -kPi) d += 2.0 * kPi;
  return std::abs(d);
}

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  return m;
}

inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace uhlmann
