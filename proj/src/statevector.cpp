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

#include "uhlmann/statevector.hpp"

#include <cmath>
#include <random>

namespace uhlmann {

namespace {

void apply_single_qubit(Eigen::VectorXcd& state, const Eigen::Matrix2cd& u, int qubit) {
  const Eigen::Index n = state.size();
  const Eigen::Index stride = Eigen::Index(1) << qubit;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i & stride) continue;
    const std::complex<double> a = state(i);
    const std::complex<double> b = state(i | stride);
    state(i) = u(0, 0) * a + u(0, 1) * b;
    state(i | stride) = u(1, 0) * a + u(1, 1) * b;
  }
}

void apply_cnot(Eigen::VectorXcd& state, int control, int target) {
  const Eigen::Index n = state.size();
  const Eigen::Index cbit = Eigen::Index(1) << control;
  const Eigen::Index tbit = Eigen::Index(1) << target;
  for (Eigen::Index i = 0; i < n; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(state(i), state(i | tbit));
  }
}

Eigen::Matrix2cd ry_matrix(double angle) {
  Eigen::Matrix2cd u;
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  u << c, -s, s, c;
  return u;
}

Eigen::Matrix2cd hadamard_matrix() {
  Eigen::Matrix2cd u;
  const double isq2 = 1.0 / std::sqrt(2.0);
  u << isq2, isq2, isq2, -isq2;
  return u;
}

Eigen::Matrix2cd sdg_matrix() {
  Eigen::Matrix2cd u;
  u << 1, 0, 0, std::complex<double>(0, -1);
  return u;
}

double sample_uniform(std::mt19937_64& gen) {
  // 53-bit mantissa; fully pinned by the mt19937_64 specification, so counts
  // are reproducible across platforms.
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

ShotCounts sample_counts(double p0, long n_shots, std::mt19937_64& gen) {
  ShotCounts counts;
  for (long k = 0; k < n_shots; ++k) {
    if (sample_uniform(gen) < p0) {
      ++counts.n0;
    } else {
      ++counts.n1;
    }
  }
  return counts;
}

double probe_z_expectation(const Eigen::VectorXcd& state) {
  double p0 = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (!(i & 1)) p0 += std::norm(state(i));
  }
  return 2.0 * p0 - 1.0;
}

}  // namespace

Eigen::VectorXcd simulate_statevector(const Circuit& circuit) {
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(Eigen::Index(1) << circuit.n_qubits());
  state(0) = 1.0;
  for (const Gate& gate : circuit.gates()) {
    switch (gate.kind) {
      case GateKind::Ry:
        apply_single_qubit(state, ry_matrix(gate.angle), gate.target);
        break;
      case GateKind::Hadamard:
        apply_single_qubit(state, hadamard_matrix(), gate.target);
        break;
      case GateKind::Sdg:
        apply_single_qubit(state, sdg_matrix(), gate.target);
        break;
      case GateKind::Cnot:
        apply_cnot(state, gate.control, gate.target);
        break;
      case GateKind::Barrier:
        break;
      case GateKind::Measure:
        throw CircuitError(
            "simulate_statevector: circuit contains measurements; strip them first");
    }
  }
  return state;
}

std::pair<double, double> probe_expectations(const Eigen::VectorXcd& state) {
  // rho_P(0,1) = sum over the other wires of psi[...,P=0] conj(psi[...,P=1]).
  std::complex<double> coherence = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (!(i & 1)) coherence += state(i) * std::conj(state(i | 1));
  }
  return {2.0 * coherence.real(), -2.0 * coherence.imag()};
}

std::optional<double> extract_phase(double exp_x, double exp_y, double offset_y) {
  const std::complex<double> z(exp_x, kPhaseSign * (exp_y - offset_y));
  if (std::abs(z) < kEpsArg) return std::nullopt;
  return principal_arg(z);
}

ProbeReadout measure_probe(const Circuit& protocol) {
  const Eigen::VectorXcd state = simulate_statevector(protocol);
  ProbeReadout readout;
  std::tie(readout.exp_x, readout.exp_y) = probe_expectations(state);
  readout.phase = extract_phase(readout.exp_x, readout.exp_y);
  return readout;
}

ShotResult sample_from_probabilities(double p0_x, double p0_y, long n_shots,
                                     std::uint64_t seed) {
  if (n_shots < 1) throw std::invalid_argument("sample_shots: n_shots must be >= 1");
  std::mt19937_64 gen(seed);
  ShotResult result;
  result.x = sample_counts(p0_x, n_shots, gen);
  result.y = sample_counts(p0_y, n_shots, gen);
  result.readout.shots = n_shots;
  result.readout.exp_x = static_cast<double>(result.x.n0 - result.x.n1) / n_shots;
  result.readout.exp_y = static_cast<double>(result.y.n0 - result.y.n1) / n_shots;
  result.readout.stderr_x =
      std::sqrt(std::max(0.0, 1.0 - result.readout.exp_x * result.readout.exp_x) / n_shots);
  result.readout.stderr_y =
      std::sqrt(std::max(0.0, 1.0 - result.readout.exp_y * result.readout.exp_y) / n_shots);
  result.readout.phase = extract_phase(result.readout.exp_x, result.readout.exp_y);
  return result;
}

ShotResult sample_shots(const Circuit& protocol, long n_shots, std::uint64_t seed) {
  // The compiled x/y readout circuits measure Z on the probe; outcome 0 has
  // probability (1 + <Z>)/2 = (1 + <sigma_{x,y}>)/2 of the pre-readout state.
  const Eigen::VectorXcd x_state =
      simulate_statevector(protocol.with_readout(ReadoutBasis::X).without_measurements());
  const Eigen::VectorXcd y_state =
      simulate_statevector(protocol.with_readout(ReadoutBasis::Y).without_measurements());
  const double p0_x = 0.5 * (1.0 + probe_z_expectation(x_state));
  const double p0_y = 0.5 * (1.0 + probe_z_expectation(y_state));
  return sample_from_probabilities(p0_x, p0_y, n_shots, seed);
}

}  // namespace uhlmann
