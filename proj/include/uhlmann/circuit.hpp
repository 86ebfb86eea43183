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
#include <vector>

#include "uhlmann/band_model.hpp"
#include "uhlmann/common.hpp"

namespace uhlmann {

enum class GateKind { Ry, Hadamard, Cnot, Sdg, Barrier, Measure };

struct Gate {
  GateKind kind;
  int target = -1;   // Ry/Hadamard/Sdg/Measure qubit; Cnot target
  int control = -1;  // Cnot only
  double angle = 0;  // Ry only
  int clbit = -1;    // Measure only
};

/// Readout basis of the probe qubit. `None` leaves the interferometer
/// un-rotated (the state the expectation values are defined on); `X` appends
/// H + measure, `Y` appends SDG + H + measure.
enum class ReadoutBasis { None, X, Y };

/// Ordered gate list over a fixed register. Wires 0/1/2 carry the probe,
/// system and ancilla roles. Appends validate indices, angle finiteness and
/// that no gate follows a measurement on the same qubit.
class Circuit {
 public:
  static constexpr int kProbe = 0;
  static constexpr int kSystem = 1;
  static constexpr int kAncilla = 2;

  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void add_ry(int qubit, double angle);
  void add_h(int qubit);
  void add_sdg(int qubit);
  void add_cnot(int control, int target);
  void add_barrier();
  void add_measure(int qubit, int clbit);

  /// Copy with the probe readout appended (no-op for ReadoutBasis::None).
  Circuit with_readout(ReadoutBasis basis) const;
  /// Copy with every Measure gate removed.
  Circuit without_measurements() const;

 private:
  void check_qubit(int qubit) const;

  int n_qubits_;
  std::vector<Gate> gates_;
  std::vector<bool> measured_;
};

/// State-preparation rotation angle gamma = 2 arccos(sqrt(1-r)).
double mixedness_angle(double r);

/// The three-qubit interferometer: prepare the purification on (S, A), apply
/// the bilocal transport rotations conditioned on the probe through CNOT
/// sandwiches, and read the probe out. Zero-angle rotations are omitted.
Circuit build_state_dependent(double gamma, double beta1, double beta2,
                              ReadoutBasis basis = ReadoutBasis::X);

/// State-dependent circuit extended with the unconditional intermediate-state
/// rotations alpha1 (system) and alpha2 (ancilla) after the entangling CNOT.
Circuit build_transport_check(double gamma, double alpha1, double alpha2, double beta1,
                              double beta2, ReadoutBasis basis = ReadoutBasis::X);

/// State-independent variant: beta1 = I, beta2 = weight * I for an open path.
Circuit build_state_independent(double gamma, double transport_phase, double weight,
                                ReadoutBasis basis = ReadoutBasis::X);

struct StateDependentAngles {
  double gamma = 0, beta1 = 0, beta2 = 0;
  double p_a = 0;
};

/// Closed-loop angles for mixedness r: beta1 = I(0,1), beta2 = p_r * beta1.
StateDependentAngles state_dependent_angles(double r, double M);

struct TransportCheckAngles {
  double gamma = 0, alpha1 = 0, alpha2 = 0, beta1 = 0, beta2 = 0;
  double p_a = 0;
};

/// Segment angles for step n of the discretized transport: alpha1 = 2 I(0, n dt)
/// (a y-rotation by alpha realizes exp(-i alpha/2 sigma_y), so the factor 2
/// prepares the transported state exactly), beta1 = I(n dt, (n+1) dt), and the
/// ancilla angles scaled by p_a (default p_r).
TransportCheckAngles transport_check_angles(double r, double M, int step, double dt,
                                            std::optional<double> p_a_override = std::nullopt);

struct StateIndependentAngles {
  double gamma = 0, beta1 = 0, beta2 = 0;
  double transport_phase = 0;  // I(0, t_f)
  double weight = 0;           // p_T clamped into [0, 1]
};

/// Open-path angles with the state-independent weight. Requires
/// 0.5 < t_f < 1. For M > 1 the weight formula has no solution in [0, 1] and
/// is clamped (the phase is 0 there for any in-range weight).
StateIndependentAngles state_independent_angles(double r, double M, double t_f);

}  // namespace uhlmann
