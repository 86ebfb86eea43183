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

#include "uhlmann/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "uhlmann/analytics.hpp"

namespace uhlmann {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits), measured_(n_qubits, false) {
  if (n_qubits < 3 || n_qubits > 8) {
    throw CircuitError("Circuit: register size must be between 3 and 8");
  }
}

void Circuit::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw CircuitError("Circuit: qubit index out of range");
  }
  if (measured_[qubit]) {
    throw CircuitError("Circuit: gate after measurement on qubit " + std::to_string(qubit));
  }
}

void Circuit::add_ry(int qubit, double angle) {
  check_qubit(qubit);
  if (!std::isfinite(angle)) throw CircuitError("Circuit: non-finite rotation angle");
  gates_.push_back({GateKind::Ry, qubit, -1, angle, -1});
}

void Circuit::add_h(int qubit) {
  check_qubit(qubit);
  gates_.push_back({GateKind::Hadamard, qubit, -1, 0, -1});
}

void Circuit::add_sdg(int qubit) {
  check_qubit(qubit);
  gates_.push_back({GateKind::Sdg, qubit, -1, 0, -1});
}

void Circuit::add_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw CircuitError("Circuit: CNOT control equals target");
  gates_.push_back({GateKind::Cnot, target, control, 0, -1});
}

void Circuit::add_barrier() { gates_.push_back({GateKind::Barrier, -1, -1, 0, -1}); }

void Circuit::add_measure(int qubit, int clbit) {
  check_qubit(qubit);
  if (clbit < 0) throw CircuitError("Circuit: negative classical bit index");
  gates_.push_back({GateKind::Measure, qubit, -1, 0, clbit});
  measured_[qubit] = true;
}

Circuit Circuit::with_readout(ReadoutBasis basis) const {
  Circuit out = *this;
  if (basis == ReadoutBasis::None) return out;
  if (basis == ReadoutBasis::Y) out.add_sdg(kProbe);
  out.add_h(kProbe);
  out.add_measure(kProbe, kProbe);
  return out;
}

Circuit Circuit::without_measurements() const {
  Circuit out(n_qubits_);
  for (const Gate& gate : gates_) {
    if (gate.kind != GateKind::Measure) out.gates_.push_back(gate);
  }
  return out;
}

double mixedness_angle(double r) {
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("mixedness_angle: r must be in [0,1]");
  return 2.0 * std::acos(std::sqrt(1.0 - r));
}

namespace {

// Shared state-preparation and conditional-transport blocks; the gate order
// follows the hardware listing (ancilla rotation before the system rotation).
void append_preparation(Circuit& c, double gamma) {
  if (gamma != 0.0) c.add_ry(Circuit::kSystem, gamma);
  c.add_cnot(Circuit::kSystem, Circuit::kAncilla);
}

void append_conditional_transport(Circuit& c, double beta1, double beta2) {
  c.add_h(Circuit::kProbe);
  c.add_cnot(Circuit::kProbe, Circuit::kAncilla);
  c.add_cnot(Circuit::kProbe, Circuit::kSystem);
  c.add_barrier();
  if (beta2 != 0.0) c.add_ry(Circuit::kAncilla, beta2);
  if (beta1 != 0.0) c.add_ry(Circuit::kSystem, beta1);
  c.add_barrier();
  c.add_cnot(Circuit::kProbe, Circuit::kAncilla);
  c.add_cnot(Circuit::kProbe, Circuit::kSystem);
}

}  // namespace

Circuit build_state_dependent(double gamma, double beta1, double beta2, ReadoutBasis basis) {
  Circuit c(3);
  append_preparation(c, gamma);
  append_conditional_transport(c, beta1, beta2);
  return c.with_readout(basis);
}

Circuit build_transport_check(double gamma, double alpha1, double alpha2, double beta1,
                              double beta2, ReadoutBasis basis) {
  Circuit c(3);
  append_preparation(c, gamma);
  if (alpha1 != 0.0) c.add_ry(Circuit::kSystem, alpha1);
  if (alpha2 != 0.0) c.add_ry(Circuit::kAncilla, alpha2);
  append_conditional_transport(c, beta1, beta2);
  return c.with_readout(basis);
}

Circuit build_state_independent(double gamma, double transport_phase, double weight,
                                ReadoutBasis basis) {
  return build_state_dependent(gamma, transport_phase, weight * transport_phase, basis);
}

StateDependentAngles state_dependent_angles(double r, double M) {
  ModelParams params;
  params.hopping = M;
  StateDependentAngles angles;
  angles.gamma = mixedness_angle(r);
  angles.p_a = purity_weight(r);
  angles.beta1 = transport_integral(0.0, 1.0, params);
  angles.beta2 = angles.p_a * angles.beta1;
  return angles;
}

TransportCheckAngles transport_check_angles(double r, double M, int step, double dt,
                                            std::optional<double> p_a_override) {
  if (step < 0 || (step + 1) * dt > 1.0 + 1e-12) {
    throw std::invalid_argument("transport_check_angles: step outside [0, 1/dt)");
  }
  ModelParams params;
  params.hopping = M;
  TransportCheckAngles angles;
  angles.gamma = mixedness_angle(r);
  angles.p_a = p_a_override.value_or(purity_weight(r));
  angles.alpha1 = 2.0 * transport_integral(0.0, step * dt, params);
  angles.alpha2 = angles.p_a * angles.alpha1;
  angles.beta1 = transport_integral(step * dt, std::min((step + 1) * dt, 1.0), params);
  angles.beta2 = angles.p_a * angles.beta1;
  return angles;
}

StateIndependentAngles state_independent_angles(double r, double M, double t_f) {
  if (!(0.5 < t_f && t_f < 1.0)) {
    throw std::invalid_argument("state_independent_angles: t_f must be in (0.5, 1)");
  }
  ModelParams params;
  params.hopping = M;
  params.t_final = t_f;
  StateIndependentAngles angles;
  angles.gamma = mixedness_angle(r);
  angles.transport_phase = transport_integral(0.0, t_f, params);
  angles.weight = std::clamp(state_independent_weight(angles.transport_phase), 0.0, 1.0);
  angles.beta1 = angles.transport_phase;
  angles.beta2 = angles.weight * angles.transport_phase;
  return angles;
}

}  // namespace uhlmann
