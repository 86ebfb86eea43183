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
#include <ostream>
#include <string>
#include <vector>

#include "uhlmann/circuit.hpp"
#include "uhlmann/noise.hpp"
#include "uhlmann/statevector.hpp"

namespace uhlmann {

enum class Engine { Analytic, IdealCircuit, Noisy, NoisyShots };

std::string engine_name(Engine engine);
Engine engine_from_name(std::string_view name);

/// One self-describing result row. Shots = 0 marks exact expectation values.
struct SweepRow {
  int step = 0;  // transport-check segment index; 0 elsewhere
  double M = 0;
  double r = 0;
  double t_f = 1.0;
  std::string p_a_mode;  // "pr", "pT", "zero" or a numeric literal
  Engine engine = Engine::Analytic;
  double exp_x = 0, exp_y = 0;
  double stderr_x = 0, stderr_y = 0;
  std::optional<double> phase;
  std::uint64_t seed = 0;
  long shots = 0;
};

/// Comment header embedded in every output file; deterministic (no clocks).
struct Provenance {
  std::string command;
  std::optional<std::string> noise_label;
  std::optional<std::uint64_t> noise_hash;
  std::vector<std::string> extra;  // additional "key = value" comment lines
};

struct SweepOptions {
  double M = 0.2;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<int> r_steps;  // uniform grid; unset = default adaptive grid
  Engine engine = Engine::Analytic;
  long shots = 8192;
  std::uint64_t seed = 0;
  std::optional<NoiseConfig> noise;
};

/// Closed-loop sweep over r at p_a = p_r (one row per grid point). The default
/// grid covers [0, 0.25] at 0.01 resolution, refined to 0.005 inside
/// [0.04, 0.10] where the transition sits.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

struct TransportCheckOptions {
  double M = 0.2;
  double r = 0.02;
  double dt = 0.1;
  std::string p_a_mode = "pr";  // "pr", "zero" or a numeric literal
  Engine engine = Engine::IdealCircuit;
  long shots = 8192;
  std::uint64_t seed = 0;
  std::optional<NoiseConfig> noise;
};

/// Adjacent-segment relative phases, one row per step n. dt must divide 1.
std::vector<SweepRow> run_transport_check(const TransportCheckOptions& options);

struct StateIndependentOptions {
  double M = 0.6;
  double t_f = 0.6;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<int> r_steps;
  Engine engine = Engine::Analytic;
  long shots = 8192;
  std::uint64_t seed = 0;
  std::optional<NoiseConfig> noise;
  bool offset_subtract = false;  // subtract the mean <sigma_y> before extraction
};

struct StateIndependentResult {
  std::vector<SweepRow> rows;
  double beta1 = 0;
  double beta2 = 0;
  double offset_y = 0;  // subtracted mean, 0 when disabled
};

/// Open-path sweep with the state-independent weight; requires 0.5 < t_f < 1.
StateIndependentResult run_state_independent(const StateIndependentOptions& options);

/// CSV with `#` provenance comments and the SweepRow schema. Transport-check
/// files prepend the step column; plain sweeps omit it.
void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                    const Provenance& provenance, bool with_step_column);

/// JSON mirror of the same rows.
void write_rows_json(std::ostream& out, const std::vector<SweepRow>& rows,
                     const Provenance& provenance);

/// Uniform grid helper: n points from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, int n);

/// Deterministic per-row RNG stream derived from the base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace uhlmann
