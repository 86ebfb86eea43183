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

#include "uhlmann/analytics.hpp"

#include <cmath>
#include <cstdio>

namespace uhlmann {

double purity_weight(double r) {
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("purity_weight: r must be in [0,1]");
  return 2.0 * std::sqrt(r * (1.0 - r));
}

double bloch_radius(double r) { return std::abs(2.0 * r - 1.0); }

MixedQubitState mixed_state(double theta, double r, double M) {
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("mixed_state: r must be in [0,1]");
  // (1-r) P_0 + r P_1 with the band projectors P_{0,1} = (1 +- n.sigma)/2.
  // Identical to the eigenstate form and regular where the gauge is not.
  const WindingVector n = winding_vector(theta, M);
  MixedQubitState state;
  state.rho = 0.5 * (Eigen::Matrix2cd::Identity() +
                     (1.0 - 2.0 * r) * (n.nx * pauli_x() + n.nz * pauli_z()));
  state.r = r;
  state.theta = theta;
  state.purity_weight = purity_weight(r);
  return state;
}

Eigen::Matrix2cd uhlmann_connection(double theta, double r, double M) {
  const double prefactor = 1.0 - purity_weight(r);
  return std::complex<double>(0, -1) * prefactor * transport_kernel(theta, M) * pauli_y();
}

UhlmannHolonomy uhlmann_holonomy(double theta_end, double r, double M) {
  if (theta_end < 0.0 || theta_end > 2.0 * kPi) {
    throw std::invalid_argument("uhlmann_holonomy: theta_end must be in [0, 2*pi]");
  }
  const double angle = (1.0 - purity_weight(r)) * winding_integral(0.0, theta_end, M);
  UhlmannHolonomy holonomy;
  holonomy.accumulated_angle = angle;
  holonomy.v_a << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return holonomy;
}

std::optional<double> uhlmann_phase_closed(double M, double r) {
  const UhlmannHolonomy holonomy = uhlmann_holonomy(2.0 * kPi, r, M);
  const Eigen::Matrix2cd rho = mixed_state(0.0, r, M).rho;
  const std::complex<double> overlap = (rho * holonomy.v_a.cast<std::complex<double>>()).trace();
  if (std::abs(overlap) < kEpsArg) return std::nullopt;
  return principal_arg(overlap);
}

CriticalMixedness critical_mixedness() {
  CriticalMixedness c;
  c.r_c1 = (2.0 - std::sqrt(3.0)) / 4.0;
  c.r_c2 = 1.0 - c.r_c1;
  return c;
}

std::optional<double> relative_phase_analytic(double M, double r, double p_a, double t_f) {
  if (t_f <= 0.0 || t_f > 1.0) {
    throw std::invalid_argument("relative_phase_analytic: t_f must be in (0, 1]");
  }
  ModelParams params;
  params.hopping = M;
  params.t_final = t_f;
  const double transport_phase = transport_integral(0.0, t_f, params);
  const double p_r = purity_weight(r);
  const double overlap = std::cos(transport_phase) * std::cos(p_a * transport_phase) +
                         p_r * std::sin(transport_phase) * std::sin(p_a * transport_phase);
  if (std::abs(overlap) < kEpsArg) return std::nullopt;
  return principal_arg(std::complex<double>(overlap, 0.0));
}

double critical_ancilla_weight(double p_r, double transport_phase) {
  const double tan_i = std::tan(transport_phase);
  if (std::abs(tan_i) < 1e-300 || transport_phase == 0.0) {
    throw std::domain_error("critical_ancilla_weight: tan(I) vanishes");
  }
  return -std::atan(1.0 / (p_r * tan_i)) / transport_phase;
}

double state_independent_weight(double transport_phase) {
  return critical_ancilla_weight(0.5, transport_phase);
}

std::size_t PhaseDiagramGrid::undefined_cells() const {
  std::size_t count = 0;
  for (const auto& cell : phase) {
    if (!cell.has_value()) ++count;
  }
  return count;
}

PhaseDiagramGrid phase_diagram(std::vector<double> m_values, std::vector<double> r_values) {
  PhaseDiagramGrid grid;
  grid.m_values = std::move(m_values);
  grid.r_values = std::move(r_values);
  grid.phase.reserve(grid.m_values.size() * grid.r_values.size());
  for (double m : grid.m_values) {
    for (double r : grid.r_values) {
      std::optional<double> cell;
      try {
        cell = uhlmann_phase_closed(m, r);
      } catch (const GapClosureError&) {
        cell = std::nullopt;
      }
      grid.phase.push_back(cell);
    }
  }
  return grid;
}

void write_phase_diagram_csv(std::ostream& out, const PhaseDiagramGrid& grid) {
  out << "M,r,R,phase_rad,defined\n";
  char buf[128];
  for (std::size_t mi = 0; mi < grid.m_values.size(); ++mi) {
    for (std::size_t ri = 0; ri < grid.r_values.size(); ++ri) {
      const auto cell = grid.at(mi, ri);
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,", grid.m_values[mi],
                    grid.r_values[ri], bloch_radius(grid.r_values[ri]));
      out << buf;
      if (cell.has_value()) {
        std::snprintf(buf, sizeof(buf), "%.12g,1\n", *cell);
      } else {
        std::snprintf(buf, sizeof(buf), ",0\n");
      }
      out << buf;
    }
  }
}

}  // namespace uhlmann
