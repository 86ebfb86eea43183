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

/// Two-qubit purification of the mixed qubit state, with amplitudes over the
/// system (x) ancilla basis {|00>, |01>, |10>, |11>} (amps[2*s + a]).
struct PurificationVector {
  Eigen::Vector4cd amps;
  double r = 0;
};

/// sqrt(1-r)|00> + sqrt(r)|11>.
PurificationVector initial_purification(double r);

/// Bilocal transport pair at time t: U_S = exp(-i I sigma_y) with
/// I = transport_integral(0, t), and U_A = U_S^{p_a}. Both real orthogonal.
struct TransportPair {
  Eigen::Matrix2d u_system;
  Eigen::Matrix2d u_ancilla;
  double p_a = 0;
};

TransportPair transport_pair(double t, const ModelParams& params, double p_a);

/// Applies U_S(t) (x) U_A(t) to the purification. The result purifies the
/// mixed state at theta(t).
PurificationVector transport(const PurificationVector& psi, double t,
                             const ModelParams& params, double p_a);

/// Reduced system state Tr_A |psi><psi|.
Eigen::Matrix2cd partial_trace_ancilla(const PurificationVector& psi);

/// |<a|b>| and arg<a|b>; the phase is undefined (nullopt) below kEpsArg.
struct OverlapPhase {
  double magnitude = 0;
  std::optional<double> phase;
};

OverlapPhase overlap_phase(const PurificationVector& a, const PurificationVector& b);

/// One adjacent-step relative phase of the discretized transport.
struct TransportResidual {
  int step = 0;
  double t = 0;  // start of the segment, n * dt
  std::optional<double> phase;
  double magnitude = 0;
};

/// Relative phases arg<Psi(n dt)|Psi((n+1) dt)> for n = 0 .. 1/dt - 1.
/// dt must divide 1 evenly. The default ancillary weight is p_r (exact
/// transport: every phase is zero); pass p_a to probe other weights.
/// Note that for this family all purification amplitudes are real, so a
/// residual phase can only be 0 or pi; deviations from exact transport at
/// p_a != p_r show up in the overlap magnitude (see the minimal-distance
/// property), not in the phase.
std::vector<TransportResidual> parallel_transport_residuals(
    const ModelParams& params, double r, double dt,
    std::optional<double> p_a_override = std::nullopt);

/// CSV export with header `step,t,phase_rad,overlap_magnitude`.
void write_residuals_csv(std::ostream& out, const std::vector<TransportResidual>& rows);

}  // namespace uhlmann
