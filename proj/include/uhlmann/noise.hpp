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

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "uhlmann/circuit.hpp"
#include "uhlmann/common.hpp"
#include "uhlmann/statevector.hpp"

namespace uhlmann {

/// Invalid or unphysical noise configuration.
struct NoiseConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Relaxation times of one qubit; infinity disables the channel.
struct QubitNoise {
  double t1_us = std::numeric_limits<double>::infinity();
  double t2_us = std::numeric_limits<double>::infinity();
};

/// Open-system model of the gate execution: per-qubit T1/T2 dissipators, a
/// residual IX term during the cross-resonance window, and the published
/// timing schedule. Rates derive as gamma_- = 1/T1 and
/// gamma_z = (1/T2 - 1/(2 T1))/2, which makes coherences decay exactly as
/// exp(-t/T2).
struct NoiseConfig {
  std::vector<QubitNoise> qubits = {{}, {}, {}};  // probe, system, ancilla
  double m_rad_per_us = 0.0;                      // residual IX strength
  double mu_rad_per_us = (kPi / 4.0) / 0.6;       // ZX drive; mu*tau_zx90 = pi/4
  double tau_1q_ns = 200.0;                       // full 2*pi single-qubit rotation
  double tau_zx90_ns = 600.0;
  double wait_1q_ns = 5.0;
  double wait_2q_ns = 40.0;

  void validate() const;  // throws NoiseConfigError (T2 > 2 T1, bad durations, ...)
};

/// Named presets: "ideal", "ibmqx2-fig3a", "ibmqx2-fig3c", "ibmqx2-errormodel".
NoiseConfig noise_preset(std::string_view name);
std::vector<std::string> noise_preset_names();

NoiseConfig noise_config_from_json(const std::string& text);
std::string noise_config_to_json(const NoiseConfig& config);
/// FNV-1a hash of the canonical JSON form, for provenance headers.
std::uint64_t noise_config_hash(const NoiseConfig& config);

/// Jump operators (8x8, rates folded in) of one qubit's spontaneous-emission
/// and dephasing channels.
std::vector<Eigen::MatrixXcd> lindblad_dissipators(const NoiseConfig& config, int qubit);

/// One coherent evolution window of the compiled circuit.
struct GateStep {
  Eigen::MatrixXcd hamiltonian;  // 8x8 generator, rad/us
  double duration_us = 0;
  std::string label;
};

/// Coherent generator and duration of a gate's primary window: the rotation
/// itself for single-qubit gates, the cross-resonance ZX90 window (with the
/// residual IX term) for a CNOT. Throws CircuitError for unsupported gates.
GateStep gate_hamiltonian(const Gate& gate, const NoiseConfig& config);

/// Full compiled schedule of a gate: primary window, CNOT framing rotations,
/// and the post-gate idle windows (label "wait").
std::vector<GateStep> compile_gate(const Gate& gate, const NoiseConfig& config);

/// 64x64 superoperator of d rho/dt = -i[H, rho] + sum_k D[L_k] rho over the
/// column-stacked rho.
Eigen::MatrixXcd liouvillian(const Eigen::MatrixXcd& hamiltonian,
                             const std::vector<Eigen::MatrixXcd>& jumps);

/// exp(L tau) applied to rho through the dense matrix exponential.
Eigen::MatrixXcd propagate(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& liouv,
                           double tau_us);

struct NoisyRunOptions {
  /// Check trace (1e-10), Hermiticity (1e-10) and positivity (-1e-9) after
  /// every step; throws std::runtime_error on violation.
  bool validate_steps = false;
};

/// Open-system probe readout of a three-qubit protocol circuit built with
/// ReadoutBasis::None: the interferometer core evolves once, then the x- and
/// y-basis readout gates are applied to copies, mirroring the two hardware
/// runs. Throws CircuitError if the circuit contains measurements.
ProbeReadout run_noisy(const Circuit& protocol, const NoiseConfig& config,
                       const NoisyRunOptions& options = {});

/// Shot sampling on top of the noisy outcome probabilities.
ShotResult sample_shots_noisy(const Circuit& protocol, const NoiseConfig& config,
                              long n_shots, std::uint64_t seed);

}  // namespace uhlmann
