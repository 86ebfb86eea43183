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

#include "uhlmann/band_model.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace uhlmann {

namespace {

double integrate_to_tol(const std::function<double(double)>& f, double a, double b,
                        const char* what) {
  if (a == b) return 0.0;
  double error = 0.0;
  using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
  double result = gk::integrate(f, a, b, /*max_depth=*/15, /*tol=*/1e-13, &error);
  if (error > kQuadAbsTol) {
    throw QuadratureError(std::string(what) + ": quadrature did not converge to " +
                              std::to_string(kQuadAbsTol) + " (achieved " +
                              std::to_string(error) + ")",
                          error);
  }
  return result;
}

}  // namespace

Schedule Schedule::linear_loop() {
  return Schedule{[](double t) { return 2.0 * kPi * t; },
                  [](double) { return 2.0 * kPi; }};
}

WindingVector winding_vector(double theta, double M) {
  if (M < 0) throw std::invalid_argument("winding_vector: M must be >= 0");
  const double g2 = 1.0 + M * M + 2.0 * M * std::cos(theta);
  const double gap = 2.0 * std::sqrt(std::max(g2, 0.0));
  if (gap < kEpsGap) {
    throw GapClosureError("winding_vector: band gap closed at theta=" +
                          std::to_string(theta) + ", M=" + std::to_string(M));
  }
  WindingVector n;
  n.nx = 2.0 * std::sin(theta) / gap;
  n.ny = 0.0;
  n.nz = 2.0 * (M + std::cos(theta)) / gap;
  n.gap = gap;
  return n;
}

Eigen::Matrix2cd band_hamiltonian(double theta, double M) {
  const WindingVector n = winding_vector(theta, M);
  return 0.5 * n.gap * (n.nx * pauli_x() + n.ny * pauli_y() + n.nz * pauli_z());
}

double gauge_g(double theta, double M) {
  const double root = std::sqrt(1.0 + M * M + 2.0 * M * std::cos(theta));
  const double denom = M + std::cos(theta) + root;
  if (std::abs(denom) < 1e-12) {
    throw SingularGaugeError("gauge_g: singular gauge at theta=" + std::to_string(theta) +
                             ", M=" + std::to_string(M));
  }
  return std::sin(theta) / denom;
}

EigenPair eigenstates(double theta, double M) {
  const double g = gauge_g(theta, M);
  const double norm = std::sqrt(1.0 + g * g);
  EigenPair pair;
  pair.ground = Eigen::Vector2d(1.0, g) / norm;
  pair.excited = Eigen::Vector2d(g, -1.0) / norm;
  pair.g_value = g;
  return pair;
}

double transport_kernel(double theta, double M) {
  // denom = G^2 / 2, so G < kEpsGap corresponds to denom < kEpsGap^2 / 2.
  const double denom = 2.0 + 2.0 * M * M + 4.0 * M * std::cos(theta);
  if (denom < 0.5 * kEpsGap * kEpsGap) {
    throw GapClosureError("transport_kernel: band gap closed at theta=" +
                          std::to_string(theta) + ", M=" + std::to_string(M));
  }
  return (1.0 + M * std::cos(theta)) / denom;
}

double generator_h(double t, const ModelParams& params) {
  return params.schedule.dtheta_dt(t) * transport_kernel(params.schedule.theta(t), params.hopping);
}

double winding_integral(double theta0, double theta1, double M) {
  return integrate_to_tol([M](double th) { return transport_kernel(th, M); }, theta0,
                          theta1, "winding_integral");
}

double transport_integral(double t0, double t_f, const ModelParams& params) {
  if (!(0.0 <= t0 && t0 <= t_f && t_f <= 1.0)) {
    throw std::invalid_argument("transport_integral: need 0 <= t0 <= t_f <= 1");
  }
  return integrate_to_tol([&params](double t) { return generator_h(t, params); }, t0, t_f,
                          "transport_integral");
}

int winding_number(double M) {
  if (std::abs(M - 1.0) < kEpsGap) {
    throw GapClosureError("winding_number: gap closes at M = 1");
  }
  const double loop = winding_integral(0.0, 2.0 * kPi, M);
  const double windings = loop / kPi;
  const int nearest = static_cast<int>(std::lround(windings));
  if (std::abs(loop - nearest * kPi) > kWindingRoundTol) {
    throw GapClosureError("winding_number: loop integral " + std::to_string(loop) +
                          " is not an integer multiple of pi");
  }
  return nearest;
}

}  // namespace uhlmann
