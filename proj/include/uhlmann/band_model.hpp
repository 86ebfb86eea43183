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

#include <functional>

#include <Eigen/Dense>

#include "uhlmann/common.hpp"

namespace uhlmann {

/// Parameter path theta(t) over t in [0, 1]. The default is the uniform
/// closed loop theta(t) = 2*pi*t; transport phases do not depend on the
/// traversal speed, only on the swept angle.
struct Schedule {
  std::function<double(double)> theta;
  std::function<double(double)> dtheta_dt;

  static Schedule linear_loop();
};

/// Physics knobs of the two-band model and its transport path.
struct ModelParams {
  double hopping = 0.2;  // M, dimensionless; the gap closes at M = 1
  double t_final = 1.0;  // protocol end time in [0, 1]
  Schedule schedule = Schedule::linear_loop();
};

/// Unit Bloch vector of the band Hamiltonian H = (G/2) n . sigma and the gap G.
/// n = (2/G)(sin theta, 0, M + cos theta), G = 2 sqrt(1 + M^2 + 2 M cos theta).
struct WindingVector {
  double nx = 0, ny = 0, nz = 0;
  double gap = 0;
};

/// Throws GapClosureError when G < kEpsGap (only reachable near M=1, theta=pi).
WindingVector winding_vector(double theta, double M);

/// Assembled 2x2 Hamiltonian (G/2) n . sigma at (theta, M).
Eigen::Matrix2cd band_hamiltonian(double theta, double M);

/// Fixed real eigenstate gauge
///   g(theta, M) = sin theta / (M + cos theta + sqrt(1 + M^2 + 2 M cos theta)).
/// Throws SingularGaugeError where the denominator vanishes (theta = pi, M < 1).
double gauge_g(double theta, double M);

/// Real gauge-fixed eigenvector pair of the band Hamiltonian.
/// `ground` = (1, g)/sqrt(1+g^2) and `excited` = (g, -1)/sqrt(1+g^2); with this
/// gauge the `ground` vector carries eigenvalue +G/2 and `excited` -G/2.
struct EigenPair {
  Eigen::Vector2d ground;
  Eigen::Vector2d excited;
  double g_value = 0;
};

EigenPair eigenstates(double theta, double M);

/// Closed form of the eigenstate mixing rate
///   <0_theta | d/dtheta 1_theta> = (d n_x/dtheta)/(2 n_z)
///                                = (1 + M cos theta)/(2 + 2 M^2 + 4 M cos theta).
double transport_kernel(double theta, double M);

/// Transport generator h(t) = (dtheta/dt) * transport_kernel(theta(t), M),
/// in radians per unit time.
double generator_h(double t, const ModelParams& params);

/// Integral of transport_kernel over theta in [theta0, theta1], adaptive
/// quadrature to kQuadAbsTol. Throws QuadratureError with the achieved error
/// estimate on non-convergence.
double winding_integral(double theta0, double theta1, double M);

/// Integral of h(t) over [t0, t_f]; requires 0 <= t0 <= t_f <= 1.
double transport_integral(double t0, double t_f, const ModelParams& params);

/// Swept angle of the winding vector over the closed loop, divided by pi and
/// rounded; 1 for M < 1, 0 for M > 1. Rejects M = 1 and any integral that is
/// not within kWindingRoundTol of an integer multiple of pi.
int winding_number(double M);

}  // namespace uhlmann
