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

#include <optional>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "uhlmann/band_model.hpp"
#include "uhlmann/common.hpp"

namespace uhlmann {

/// Purity weight p_r = 2 sqrt(r (1-r)). Zero for pure states, one at r = 1/2.
double purity_weight(double r);

/// Bloch radius R = |2r - 1| of the mixed qubit state.
double bloch_radius(double r);

/// Mixed qubit state rho = (1-r)|0_theta><0_theta| + r |1_theta><1_theta|,
/// assembled in the computational basis. Eigenvalues are {1-r, r}.
struct MixedQubitState {
  Eigen::Matrix2cd rho;
  double r = 0;
  double theta = 0;
  double purity_weight = 0;  // p_r
};

MixedQubitState mixed_state(double theta, double r, double M);

/// Transport connection of the mixed-state family, per unit theta:
///   A(theta) = -i (1 - p_r) * transport_kernel(theta, M) * sigma_y.
/// Anti-Hermitian; vanishes at r = 1/2 and reduces to the pure-state
/// connection at r in {0, 1}.
Eigen::Matrix2cd uhlmann_connection(double theta, double r, double M);

/// Holonomy V_A(theta_end) = exp(-i (1-p_r) * I * sigma_y) with
/// I = integral of the transport kernel over [0, theta_end]. Real orthogonal.
struct UhlmannHolonomy {
  Eigen::Matrix2d v_a;
  double accumulated_angle = 0;  // (1 - p_r) * I
};

UhlmannHolonomy uhlmann_holonomy(double theta_end, double r, double M);

/// Closed-loop mixed-state geometric phase, computed as
/// arg Tr[rho_{theta=0} V_A(2 pi)]. Returns 0 or pi; nullopt (undefined) when
/// the trace magnitude falls below kEpsArg, which happens exactly at the
/// critical mixedness.
std::optional<double> uhlmann_phase_closed(double M, double r);

/// Mixedness values where the closed-loop phase jumps: solutions of
/// p_r = 1/2, i.e. r_c1 = (2 - sqrt 3)/4 and r_c2 = 1 - r_c1.
struct CriticalMixedness {
  double r_c1 = 0;
  double r_c2 = 0;
};

CriticalMixedness critical_mixedness();

/// Interferometric relative phase between the initial and transported
/// purification,
///   arg[ cos(I) cos(p_a I) + p_r sin(I) sin(p_a I) ],  I = transport_integral(0, t_f).
/// The overlap is real, so the result is 0 or pi; nullopt when |overlap| < kEpsArg.
std::optional<double> relative_phase_analytic(double M, double r, double p_a, double t_f);

/// Critical ancillary weight at which the relative phase jumps:
///   p_a^c = -(1/I) arctan(1 / (p_r tan I)).
/// Monotonically decreasing in p_r for pi/2 < I < pi. Throws std::domain_error
/// when tan(I) vanishes.
double critical_ancilla_weight(double p_r, double transport_phase);

/// State-independent ancillary weight p_T = -(1/I) arctan(2 / tan I), the
/// critical weight evaluated at p_r = 1/2. With p_a = p_T the measured
/// relative phase equals the closed-loop phase without knowing r.
double state_independent_weight(double transport_phase);

/// Tabulated closed-loop phase over an (M, r) grid, with the Bloch radius
/// column. Cells at undefined phases (critical boundary, gap closure) are
/// left empty.
struct PhaseDiagramGrid {
  std::vector<double> m_values;
  std::vector<double> r_values;
  // Row-major over m (rows) then r (columns).
  std::vector<std::optional<double>> phase;

  std::optional<double> at(std::size_t mi, std::size_t ri) const {
    return phase[mi * r_values.size() + ri];
  }
  std::size_t undefined_cells() const;
};

PhaseDiagramGrid phase_diagram(std::vector<double> m_values, std::vector<double> r_values);

/// CSV export with header `M,r,R,phase_rad,defined`; undefined cells leave
/// phase_rad empty and set defined=0.
void write_phase_diagram_csv(std::ostream& out, const PhaseDiagramGrid& grid);

}  // namespace uhlmann
