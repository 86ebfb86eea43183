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

#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "uhlmann/circuit.hpp"
#include "uhlmann/common.hpp"

namespace uhlmann {

/// Exact statevector of the circuit applied to |0...0>, little-endian (qubit q
/// is bit q of the amplitude index). Barriers are skipped; a Measure gate is a
/// malformed input here — strip it first (without_measurements()).
Eigen::VectorXcd simulate_statevector(const Circuit& circuit);

/// (<sigma_x>, <sigma_y>) of the probe qubit (wire 0).
std::pair<double, double> probe_expectations(const Eigen::VectorXcd& state);

/// Engine sign constant s in arg(exp_x + i s (exp_y - offset)): fixed to -1,
/// which makes the interferometer circuit reproduce the analytic relative
/// phase (validated by the oracle-equivalence suite).
inline constexpr int kPhaseSign = -1;

/// Interferometric phase arg(exp_x + i s (exp_y - offset_y)); nullopt when
/// the complex magnitude falls below kEpsArg.
std::optional<double> extract_phase(double exp_x, double exp_y, double offset_y = 0.0);

/// Probe readout summary. shots == 0 means exact expectation values.
struct ProbeReadout {
  double exp_x = 0;
  double exp_y = 0;
  std::optional<double> phase;
  double stderr_x = 0;
  double stderr_y = 0;
  long shots = 0;
};

/// Exact probe readout of a protocol circuit (built with ReadoutBasis::None).
ProbeReadout measure_probe(const Circuit& protocol);

struct ShotCounts {
  long n0 = 0;
  long n1 = 0;
};

/// Measurement counts of the compiled x- and y-basis circuits plus the
/// estimated readout. Deterministic in the seed: the same seed always yields
/// bit-identical counts.
struct ShotResult {
  ShotCounts x;
  ShotCounts y;
  ProbeReadout readout;
};

/// Samples `n_shots` probe measurements from each compiled readout circuit of
/// the protocol (built with ReadoutBasis::None). Expectations are (n0-n1)/n,
/// standard errors sqrt((1-exp^2)/n).
ShotResult sample_shots(const Circuit& protocol, long n_shots, std::uint64_t seed);

/// Shot sampling from externally supplied outcome probabilities; used by both
/// the ideal and the noisy engines.
ShotResult sample_from_probabilities(double p0_x, double p0_y, long n_shots,
                                     std::uint64_t seed);

}  // namespace uhlmann
