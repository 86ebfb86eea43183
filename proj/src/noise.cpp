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

#include "uhlmann/noise.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include <json.hpp>

namespace uhlmann {

namespace {

constexpr int kQubits = 3;
constexpr int kDim = 8;

Eigen::Matrix2cd sigma_minus() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 1) = 1.0;  // |0><1|
  return m;
}

// Little-endian embedding: qubit 0 is the least significant amplitude bit.
Eigen::MatrixXcd embed(const Eigen::Matrix2cd& op, int qubit) {
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if ((i & ~(1 << qubit)) != (j & ~(1 << qubit))) continue;
      full(i, j) = op((i >> qubit) & 1, (j >> qubit) & 1);
    }
  }
  return full;
}

double decay_rate(double t_us) { return std::isfinite(t_us) ? 1.0 / t_us : 0.0; }

double dephasing_rate(const QubitNoise& q) {
  const double inv_t2 = decay_rate(q.t2_us);
  const double inv_t1 = decay_rate(q.t1_us);
  return 0.5 * (inv_t2 - 0.5 * inv_t1);
}

GateStep single_qubit_rotation(const Eigen::Matrix2cd& axis, double angle, int qubit,
                               const NoiseConfig& config, std::string label) {
  // A rotation by `angle` about `axis` is exp(-i angle/2 axis); its duration
  // scales with the fraction of a full 2*pi rotation.
  const double tau_us = std::abs(angle) / (2.0 * kPi) * config.tau_1q_ns * 1e-3;
  GateStep step;
  step.duration_us = tau_us;
  step.hamiltonian = (angle / (2.0 * tau_us)) * embed(axis, qubit);
  step.label = std::move(label);
  return step;
}

GateStep wait_step(double ns, const char* label) {
  return {Eigen::MatrixXcd::Zero(kDim, kDim), ns * 1e-3, label};
}

void check_step_physicality(const Eigen::MatrixXcd& rho, const std::string& label) {
  const double trace_error = std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
  if (trace_error > 1e-10) {
    throw std::runtime_error("run_noisy: trace drift " + std::to_string(trace_error) +
                             " after " + label);
  }
  const double herm_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_error > 1e-10) {
    throw std::runtime_error("run_noisy: Hermiticity violation after " + label);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (rho + rho.adjoint()));
  if (solver.eigenvalues().minCoeff() < -1e-9) {
    throw std::runtime_error("run_noisy: negative eigenvalue after " + label);
  }
}

}  // namespace

void NoiseConfig::validate() const {
  if (qubits.size() < kQubits) {
    throw NoiseConfigError("noise config must describe at least 3 qubits");
  }
  for (std::size_t q = 0; q < qubits.size(); ++q) {
    const auto& n = qubits[q];
    if (n.t1_us <= 0.0 || n.t2_us <= 0.0) {
      throw NoiseConfigError("qubit " + std::to_string(q) + ": T1 and T2 must be positive");
    }
    if (n.t2_us > 2.0 * n.t1_us) {
      throw NoiseConfigError("qubit " + std::to_string(q) +
                             ": T2 > 2*T1 is unphysical (negative dephasing rate)");
    }
  }
  if (tau_1q_ns <= 0.0 || tau_zx90_ns <= 0.0 || wait_1q_ns < 0.0 || wait_2q_ns < 0.0) {
    throw NoiseConfigError("gate durations must be positive and waits non-negative");
  }
}

NoiseConfig noise_preset(std::string_view name) {
  NoiseConfig config;
  config.m_rad_per_us = 2.0 * kPi * 0.4;
  if (name == "ideal") {
    config.m_rad_per_us = 0.0;
  } else if (name == "ibmqx2-fig3a") {
    config.qubits = {{45.0, 40.0}, {31.0, 27.0}, {46.0, 80.0}};
  } else if (name == "ibmqx2-fig3c") {
    config.qubits = {{41.0, 31.0}, {52.0, 37.0}, {62.0, 87.0}};
  } else if (name == "ibmqx2-errormodel") {
    config.qubits = {{51.0, 51.0}, {51.0, 51.0}, {51.0, 51.0}};
  } else {
    throw NoiseConfigError("unknown noise preset '" + std::string(name) + "'");
  }
  config.validate();
  return config;
}

std::vector<std::string> noise_preset_names() {
  return {"ideal", "ibmqx2-fig3a", "ibmqx2-fig3c", "ibmqx2-errormodel"};
}

NoiseConfig noise_config_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw NoiseConfigError(std::string("noise config: ") + e.what());
  }
  NoiseConfig config;
  config.qubits.clear();
  try {
    for (const auto& q : doc.at("qubits")) {
      QubitNoise noise;
      if (q.contains("t1_us") && !q["t1_us"].is_null()) noise.t1_us = q["t1_us"].get<double>();
      if (q.contains("t2_us") && !q["t2_us"].is_null()) noise.t2_us = q["t2_us"].get<double>();
      config.qubits.push_back(noise);
    }
    config.m_rad_per_us = doc.at("m_rad_per_us").get<double>();
    config.mu_rad_per_us = doc.at("mu_rad_per_us").get<double>();
    config.tau_1q_ns = doc.at("tau_1q_ns").get<double>();
    config.tau_zx90_ns = doc.at("tau_zx90_ns").get<double>();
    config.wait_1q_ns = doc.at("wait_1q_ns").get<double>();
    config.wait_2q_ns = doc.at("wait_2q_ns").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw NoiseConfigError(std::string("noise config: ") + e.what());
  }
  config.validate();
  return config;
}

std::string noise_config_to_json(const NoiseConfig& config) {
  nlohmann::json doc;
  doc["qubits"] = nlohmann::json::array();
  for (const auto& q : config.qubits) {
    nlohmann::json entry;
    entry["t1_us"] = std::isfinite(q.t1_us) ? nlohmann::json(q.t1_us) : nlohmann::json();
    entry["t2_us"] = std::isfinite(q.t2_us) ? nlohmann::json(q.t2_us) : nlohmann::json();
    doc["qubits"].push_back(entry);
  }
  doc["m_rad_per_us"] = config.m_rad_per_us;
  doc["mu_rad_per_us"] = config.mu_rad_per_us;
  doc["tau_1q_ns"] = config.tau_1q_ns;
  doc["tau_zx90_ns"] = config.tau_zx90_ns;
  doc["wait_1q_ns"] = config.wait_1q_ns;
  doc["wait_2q_ns"] = config.wait_2q_ns;
  return doc.dump(2);
}

std::uint64_t noise_config_hash(const NoiseConfig& config) {
  const std::string json = noise_config_to_json(config);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : json) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::vector<Eigen::MatrixXcd> lindblad_dissipators(const NoiseConfig& config, int qubit) {
  if (qubit < 0 || qubit >= static_cast<int>(config.qubits.size())) {
    throw std::invalid_argument("lindblad_dissipators: qubit index out of range");
  }
  const QubitNoise& noise = config.qubits[qubit];
  const double gamma_minus = decay_rate(noise.t1_us);
  const double gamma_z = dephasing_rate(noise);
  if (gamma_z < 0.0) {
    throw NoiseConfigError("lindblad_dissipators: T2 > 2*T1 on qubit " +
                           std::to_string(qubit));
  }
  std::vector<Eigen::MatrixXcd> jumps;
  if (gamma_minus > 0.0) {
    jumps.push_back(std::sqrt(gamma_minus) * embed(sigma_minus(), qubit));
  }
  if (gamma_z > 0.0) {
    jumps.push_back(std::sqrt(gamma_z) * embed(pauli_z(), qubit));
  }
  return jumps;
}

GateStep gate_hamiltonian(const Gate& gate, const NoiseConfig& config) {
  switch (gate.kind) {
    case GateKind::Ry:
      if (gate.angle == 0.0) return {Eigen::MatrixXcd::Zero(kDim, kDim), 0.0, "ry(0)"};
      return single_qubit_rotation(pauli_y(), gate.angle, gate.target, config, "ry");
    case GateKind::Hadamard: {
      // pi rotation about (x+z)/sqrt(2); equals H up to a global phase.
      const Eigen::Matrix2cd axis = (pauli_x() + pauli_z()) / std::sqrt(2.0);
      return single_qubit_rotation(axis, kPi, gate.target, config, "h");
    }
    case GateKind::Sdg:
      // SDG = exp(+i pi/4 sigma_z) up to a global phase.
      return single_qubit_rotation(pauli_z(), -kPi / 2.0, gate.target, config, "sdg");
    case GateKind::Cnot: {
      GateStep step;
      step.duration_us = config.tau_zx90_ns * 1e-3;
      const double zx = config.mu_rad_per_us;
      const double ix = config.m_rad_per_us;
      step.hamiltonian = ix * embed(pauli_x(), gate.target) +
                         zx * embed(pauli_z(), gate.control) * embed(pauli_x(), gate.target);
      step.label = "zx90";
      return step;
    }
    case GateKind::Barrier:
      return {Eigen::MatrixXcd::Zero(kDim, kDim), 0.0, "barrier"};
    case GateKind::Measure:
      break;
  }
  throw CircuitError("gate_hamiltonian: unsupported gate in the noisy engine");
}

std::vector<GateStep> compile_gate(const Gate& gate, const NoiseConfig& config) {
  std::vector<GateStep> steps;
  switch (gate.kind) {
    case GateKind::Ry:
      if (gate.angle == 0.0) return steps;
      steps.push_back(gate_hamiltonian(gate, config));
      steps.push_back(wait_step(config.wait_1q_ns, "wait"));
      return steps;
    case GateKind::Hadamard:
    case GateKind::Sdg:
      steps.push_back(gate_hamiltonian(gate, config));
      steps.push_back(wait_step(config.wait_1q_ns, "wait"));
      return steps;
    case GateKind::Cnot: {
      // CNOT = e^{-i pi/4} RZ_c(-pi/2) RX_t(-pi/2) ZX90; the residual IX acts
      // only during the cross-resonance window.
      steps.push_back(gate_hamiltonian(gate, config));
      steps.push_back(wait_step(config.wait_2q_ns, "wait"));
      steps.push_back(
          single_qubit_rotation(pauli_x(), -kPi / 2.0, gate.target, config, "rx"));
      steps.push_back(wait_step(config.wait_1q_ns, "wait"));
      steps.push_back(
          single_qubit_rotation(pauli_z(), -kPi / 2.0, gate.control, config, "rz"));
      steps.push_back(wait_step(config.wait_1q_ns, "wait"));
      return steps;
    }
    case GateKind::Barrier:
      return steps;
    case GateKind::Measure:
      break;
  }
  throw CircuitError("compile_gate: unsupported gate in the noisy engine");
}

Eigen::MatrixXcd liouvillian(const Eigen::MatrixXcd& hamiltonian,
                             const std::vector<Eigen::MatrixXcd>& jumps) {
  const Eigen::Index dim = hamiltonian.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  auto kron = [dim](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(dim * dim, dim * dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j)
        out.block(i * dim, j * dim, dim, dim) = a(i, j) * b;
    return out;
  };
  // Column-stacked convention: vec(A rho B) = (B^T kron A) vec(rho).
  const std::complex<double> im(0, 1);
  Eigen::MatrixXcd liouv = -im * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
  for (const auto& jump : jumps) {
    const Eigen::MatrixXcd jdj = jump.adjoint() * jump;
    liouv += kron(jump.conjugate(), jump) -
             0.5 * (kron(id, jdj) + kron(jdj.transpose(), id));
  }
  return liouv;
}

Eigen::MatrixXcd propagate(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& liouv,
                           double tau_us) {
  const Eigen::Index dim = rho.rows();
  if (liouv.rows() != dim * dim) {
    throw std::invalid_argument("propagate: superoperator/state dimension mismatch");
  }
  if (tau_us == 0.0) return rho;
  const Eigen::MatrixXcd prop = (liouv * tau_us).exp();
  const Eigen::Map<const Eigen::VectorXcd> vec(rho.data(), dim * dim);
  const Eigen::VectorXcd out = prop * vec;
  return Eigen::Map<const Eigen::MatrixXcd>(out.data(), dim, dim);
}

namespace {

class NoisyEngine {
 public:
  NoisyEngine(const NoiseConfig& config, bool validate)
      : config_(config), validate_(validate) {
    config.validate();
    for (int q = 0; q < kQubits; ++q) {
      for (auto& jump : lindblad_dissipators(config, q)) {
        jumps_.push_back(std::move(jump));
      }
    }
  }

  void apply(Eigen::MatrixXcd& rho, const GateStep& step) const {
    if (step.duration_us == 0.0) return;
    rho = propagate(rho, liouvillian(step.hamiltonian, jumps_), step.duration_us);
    if (validate_) check_step_physicality(rho, step.label);
  }

  void apply_gate(Eigen::MatrixXcd& rho, const Gate& gate) const {
    for (const GateStep& step : compile_gate(gate, config_)) apply(rho, step);
  }

 private:
  const NoiseConfig& config_;
  bool validate_;
  std::vector<Eigen::MatrixXcd> jumps_;
};

double probe_z_of(const Eigen::MatrixXcd& rho) {
  const Eigen::MatrixXcd z0 = embed(pauli_z(), 0);
  return (rho * z0).trace().real();
}

// Evolves the interferometer core once, then branches into the two readout
// bases the way the hardware protocol runs them.
std::pair<double, double> noisy_xy(const Circuit& protocol, const NoiseConfig& config,
                                   bool validate) {
  if (protocol.n_qubits() != kQubits) {
    throw CircuitError("run_noisy: expected a 3-qubit protocol circuit");
  }
  for (const Gate& gate : protocol.gates()) {
    if (gate.kind == GateKind::Measure) {
      throw CircuitError(
          "run_noisy: pass the protocol without readout (ReadoutBasis::None)");
    }
  }
  NoisyEngine engine(config, validate);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kDim, kDim);
  rho(0, 0) = 1.0;
  for (const Gate& gate : protocol.gates()) engine.apply_gate(rho, gate);

  Eigen::MatrixXcd rho_x = rho;
  engine.apply_gate(rho_x, {GateKind::Hadamard, Circuit::kProbe, -1, 0, -1});
  Eigen::MatrixXcd rho_y = rho;
  engine.apply_gate(rho_y, {GateKind::Sdg, Circuit::kProbe, -1, 0, -1});
  engine.apply_gate(rho_y, {GateKind::Hadamard, Circuit::kProbe, -1, 0, -1});
  return {probe_z_of(rho_x), probe_z_of(rho_y)};
}

}  // namespace

ProbeReadout run_noisy(const Circuit& protocol, const NoiseConfig& config,
                       const NoisyRunOptions& options) {
  ProbeReadout readout;
  std::tie(readout.exp_x, readout.exp_y) = noisy_xy(protocol, config, options.validate_steps);
  readout.phase = extract_phase(readout.exp_x, readout.exp_y);
  return readout;
}

ShotResult sample_shots_noisy(const Circuit& protocol, const NoiseConfig& config,
                              long n_shots, std::uint64_t seed) {
  const auto [exp_x, exp_y] = noisy_xy(protocol, config, false);
  return sample_from_probabilities(0.5 * (1.0 + exp_x), 0.5 * (1.0 + exp_y), n_shots, seed);
}

}  // namespace uhlmann
