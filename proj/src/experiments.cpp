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

#include "uhlmann/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "uhlmann/analytics.hpp"

namespace uhlmann {

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

double parse_p_a_mode(const std::string& mode, double r) {
  if (mode == "pr") return purity_weight(r);
  if (mode == "zero") return 0.0;
  try {
    std::size_t pos = 0;
    const double value = std::stod(mode, &pos);
    if (pos == mode.size()) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("unknown p_a mode '" + mode + "'");
}

const NoiseConfig& require_noise(const std::optional<NoiseConfig>& noise) {
  if (!noise.has_value()) {
    throw std::invalid_argument("noisy engine selected but no noise config given");
  }
  return *noise;
}

// Fills the engine-dependent readout fields of a row whose circuit is given.
void fill_row_from_circuit(SweepRow& row, const Circuit& protocol,
                           const std::optional<NoiseConfig>& noise, long shots,
                           std::uint64_t row_seed) {
  switch (row.engine) {
    case Engine::IdealCircuit: {
      const ProbeReadout readout = measure_probe(protocol);
      row.exp_x = readout.exp_x;
      row.exp_y = readout.exp_y;
      row.phase = readout.phase;
      break;
    }
    case Engine::Noisy: {
      const ProbeReadout readout = run_noisy(protocol, require_noise(noise));
      row.exp_x = readout.exp_x;
      row.exp_y = readout.exp_y;
      row.phase = readout.phase;
      break;
    }
    case Engine::NoisyShots: {
      const ShotResult result =
          sample_shots_noisy(protocol, require_noise(noise), shots, row_seed);
      row.exp_x = result.readout.exp_x;
      row.exp_y = result.readout.exp_y;
      row.stderr_x = result.readout.stderr_x;
      row.stderr_y = result.readout.stderr_y;
      row.phase = result.readout.phase;
      row.seed = row_seed;
      row.shots = shots;
      break;
    }
    case Engine::Analytic:
      throw std::logic_error("fill_row_from_circuit: analytic engine has no circuit");
  }
}

std::vector<double> default_sweep_grid() {
  // 0.01 resolution, refined to 0.005 inside the transition window.
  std::vector<double> grid;
  for (double r = 0.0; r < 0.04 - 1e-12; r += 0.01) grid.push_back(r);
  for (double r = 0.04; r < 0.10 - 1e-12; r += 0.005) grid.push_back(r);
  for (double r = 0.10; r <= 0.25 + 1e-12; r += 0.01) grid.push_back(r);
  return grid;
}

std::vector<double> r_grid_from(const std::optional<double>& r_min,
                                const std::optional<double>& r_max,
                                const std::optional<int>& r_steps,
                                const std::vector<double>& fallback) {
  if (!r_min && !r_max && !r_steps) return fallback;
  const double lo = r_min.value_or(0.0);
  const double hi = r_max.value_or(0.25);
  const int n = r_steps.value_or(26);
  if (lo < 0.0 || hi > 1.0 || hi < lo || n < 1) {
    throw std::invalid_argument("invalid r grid");
  }
  return linear_grid(lo, hi, n);
}

}  // namespace

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::Analytic: return "analytic";
    case Engine::IdealCircuit: return "ideal-circuit";
    case Engine::Noisy: return "noisy";
    case Engine::NoisyShots: return "noisy+shots";
  }
  return "?";
}

Engine engine_from_name(std::string_view name) {
  if (name == "analytic") return Engine::Analytic;
  if (name == "ideal-circuit") return Engine::IdealCircuit;
  if (name == "noisy") return Engine::Noisy;
  if (name == "noisy+shots") return Engine::NoisyShots;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> grid;
  grid.reserve(n);
  if (n == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));
  return grid;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 over the combined value; independent streams per row.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  const std::vector<double> grid =
      r_grid_from(options.r_min, options.r_max, options.r_steps, default_sweep_grid());
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    SweepRow row;
    row.M = options.M;
    row.r = r;
    row.t_f = 1.0;
    row.p_a_mode = "pr";
    row.engine = options.engine;
    if (options.engine == Engine::Analytic) {
      const double transport_phase = transport_integral(0.0, 1.0, {options.M, 1.0});
      const double p_r = purity_weight(r);
      row.exp_x = std::cos(transport_phase) * std::cos(p_r * transport_phase) +
                  p_r * std::sin(transport_phase) * std::sin(p_r * transport_phase);
      row.phase = relative_phase_analytic(options.M, r, p_r, 1.0);
    } else {
      const StateDependentAngles angles = state_dependent_angles(r, options.M);
      const Circuit protocol = build_state_dependent(angles.gamma, angles.beta1,
                                                     angles.beta2, ReadoutBasis::None);
      fill_row_from_circuit(row, protocol, options.noise, options.shots,
                            derive_seed(options.seed, i));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> run_transport_check(const TransportCheckOptions& options) {
  const double steps_exact = 1.0 / options.dt;
  const int steps = static_cast<int>(std::lround(steps_exact));
  if (options.dt <= 0.0 || std::abs(steps_exact - steps) > 1e-9) {
    throw std::invalid_argument("transport-check: dt must divide 1 evenly");
  }
  const double p_a = parse_p_a_mode(options.p_a_mode, options.r);
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (int n = 0; n < steps; ++n) {
    SweepRow row;
    row.step = n;
    row.M = options.M;
    row.r = options.r;
    row.t_f = (n + 1) * options.dt;
    row.p_a_mode = options.p_a_mode;
    row.engine = options.engine;
    const TransportCheckAngles angles =
        transport_check_angles(options.r, options.M, n, options.dt, p_a);
    if (options.engine == Engine::Analytic) {
      const double p_r = purity_weight(options.r);
      row.exp_x = std::cos(angles.beta1) * std::cos(angles.beta2) +
                  p_r * std::sin(angles.beta1) * std::sin(angles.beta2);
      row.phase = extract_phase(row.exp_x, 0.0);
    } else {
      const Circuit protocol =
          build_transport_check(angles.gamma, angles.alpha1, angles.alpha2, angles.beta1,
                                angles.beta2, ReadoutBasis::None);
      fill_row_from_circuit(row, protocol, options.noise, options.shots,
                            derive_seed(options.seed, static_cast<std::uint64_t>(n)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

StateIndependentResult run_state_independent(const StateIndependentOptions& options) {
  if (!(0.5 < options.t_f && options.t_f < 1.0)) {
    throw std::invalid_argument("state-independent: t_f must be in (0.5, 1)");
  }
  const std::vector<double> grid =
      r_grid_from(options.r_min, options.r_max, options.r_steps, linear_grid(0.0, 0.99, 100));
  StateIndependentResult result;
  result.rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const StateIndependentAngles angles = state_independent_angles(r, options.M, options.t_f);
    result.beta1 = angles.beta1;
    result.beta2 = angles.beta2;
    SweepRow row;
    row.M = options.M;
    row.r = r;
    row.t_f = options.t_f;
    row.p_a_mode = "pT";
    row.engine = options.engine;
    if (options.engine == Engine::Analytic) {
      const double p_r = purity_weight(r);
      row.exp_x = std::cos(angles.beta1) * std::cos(angles.beta2) +
                  p_r * std::sin(angles.beta1) * std::sin(angles.beta2);
      row.phase = extract_phase(row.exp_x, 0.0);
    } else {
      const Circuit protocol = build_state_dependent(angles.gamma, angles.beta1,
                                                     angles.beta2, ReadoutBasis::None);
      fill_row_from_circuit(row, protocol, options.noise, options.shots,
                            derive_seed(options.seed, i));
    }
    result.rows.push_back(std::move(row));
  }
  if (options.offset_subtract) {
    double mean = 0.0;
    for (const auto& row : result.rows) mean += row.exp_y;
    mean /= static_cast<double>(result.rows.size());
    result.offset_y = mean;
    for (auto& row : result.rows) {
      row.phase = extract_phase(row.exp_x, row.exp_y, mean);
    }
  }
  return result;
}

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                    const Provenance& provenance, bool with_step_column) {
  out << "# uhlmann-sim\n";
  out << "# command: " << provenance.command << "\n";
  if (provenance.noise_label) {
    out << "# noise: " << *provenance.noise_label;
    if (provenance.noise_hash) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " fnv1a=%016llx",
                    static_cast<unsigned long long>(*provenance.noise_hash));
      out << buf;
    }
    out << "\n";
  }
  for (const auto& line : provenance.extra) out << "# " << line << "\n";
  out << "# shots: 0 = exact expectation values\n";
  if (with_step_column) out << "step,";
  out << "M,r,t_f,p_a_mode,engine,exp_x,exp_y,stderr_x,stderr_y,phase_rad,defined,seed,"
         "shots\n";
  for (const auto& row : rows) {
    if (with_step_column) out << row.step << ",";
    out << format_double(row.M) << "," << format_double(row.r) << ","
        << format_double(row.t_f) << "," << row.p_a_mode << "," << engine_name(row.engine)
        << "," << format_double(row.exp_x) << "," << format_double(row.exp_y) << ","
        << format_double(row.stderr_x) << "," << format_double(row.stderr_y) << ",";
    if (row.phase) out << format_double(*row.phase);
    out << "," << (row.phase ? 1 : 0) << "," << row.seed << "," << row.shots << "\n";
  }
}

void write_rows_json(std::ostream& out, const std::vector<SweepRow>& rows,
                     const Provenance& provenance) {
  nlohmann::json doc;
  doc["provenance"]["command"] = provenance.command;
  if (provenance.noise_label) doc["provenance"]["noise"] = *provenance.noise_label;
  if (provenance.noise_hash) doc["provenance"]["noise_fnv1a"] = *provenance.noise_hash;
  for (const auto& line : provenance.extra) doc["provenance"]["notes"].push_back(line);
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json entry;
    entry["step"] = row.step;
    entry["M"] = row.M;
    entry["r"] = row.r;
    entry["t_f"] = row.t_f;
    entry["p_a_mode"] = row.p_a_mode;
    entry["engine"] = engine_name(row.engine);
    entry["exp_x"] = row.exp_x;
    entry["exp_y"] = row.exp_y;
    entry["stderr_x"] = row.stderr_x;
    entry["stderr_y"] = row.stderr_y;
    entry["phase_rad"] = row.phase ? nlohmann::json(*row.phase) : nlohmann::json();
    entry["defined"] = row.phase.has_value();
    entry["seed"] = row.seed;
    entry["shots"] = row.shots;
    doc["rows"].push_back(entry);
  }
  out << doc.dump(2) << "\n";
}

}  // namespace uhlmann
