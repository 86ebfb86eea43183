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

#include "uhlmann/purification.hpp"

#include <cmath>
#include <cstdio>

#include "uhlmann/analytics.hpp"

namespace uhlmann {

namespace {

Eigen::Matrix2d rotation_y(double angle) {
  Eigen::Matrix2d u;
  u << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return u;
}

}  // namespace

PurificationVector initial_purification(double r) {
  if (r < 0.0 || r > 1.0) {
    throw std::invalid_argument("initial_purification: r must be in [0,1]");
  }
  PurificationVector psi;
  psi.amps.setZero();
  psi.amps(0) = std::sqrt(1.0 - r);
  psi.amps(3) = std::sqrt(r);
  psi.r = r;
  return psi;
}

TransportPair transport_pair(double t, const ModelParams& params, double p_a) {
  const double transport_phase = transport_integral(0.0, t, params);
  TransportPair pair;
  pair.u_system = rotation_y(transport_phase);
  pair.u_ancilla = rotation_y(p_a * transport_phase);
  pair.p_a = p_a;
  return pair;
}

PurificationVector transport(const PurificationVector& psi, double t,
                             const ModelParams& params, double p_a) {
  const TransportPair pair = transport_pair(t, params, p_a);
  PurificationVector out;
  out.r = psi.r;
  out.amps.setZero();
  for (int s = 0; s < 2; ++s) {
    for (int a = 0; a < 2; ++a) {
      std::complex<double> acc = 0.0;
      for (int s2 = 0; s2 < 2; ++s2) {
        for (int a2 = 0; a2 < 2; ++a2) {
          acc += pair.u_system(s, s2) * pair.u_ancilla(a, a2) * psi.amps(2 * s2 + a2);
        }
      }
      out.amps(2 * s + a) = acc;
    }
  }
  return out;
}

Eigen::Matrix2cd partial_trace_ancilla(const PurificationVector& psi) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int s = 0; s < 2; ++s) {
    for (int s2 = 0; s2 < 2; ++s2) {
      for (int a = 0; a < 2; ++a) {
        rho(s, s2) += psi.amps(2 * s + a) * std::conj(psi.amps(2 * s2 + a));
      }
    }
  }
  return rho;
}

OverlapPhase overlap_phase(const PurificationVector& a, const PurificationVector& b) {
  const std::complex<double> overlap = a.amps.dot(b.amps);  // conjugates a
  OverlapPhase result;
  result.magnitude = std::abs(overlap);
  if (result.magnitude >= kEpsArg) result.phase = principal_arg(overlap);
  return result;
}

std::vector<TransportResidual> parallel_transport_residuals(
    const ModelParams& params, double r, double dt, std::optional<double> p_a_override) {
  if (dt <= 0.0 || dt > 1.0) {
    throw std::invalid_argument("parallel_transport_residuals: dt must be in (0, 1]");
  }
  const double steps_exact = 1.0 / dt;
  const int steps = static_cast<int>(std::lround(steps_exact));
  if (std::abs(steps_exact - steps) > 1e-9) {
    throw std::invalid_argument("parallel_transport_residuals: dt must divide 1 evenly");
  }
  const double p_a = p_a_override.value_or(purity_weight(r));
  const PurificationVector psi0 = initial_purification(r);
  std::vector<TransportResidual> rows;
  rows.reserve(steps);
  PurificationVector prev = psi0;
  for (int n = 0; n < steps; ++n) {
    const PurificationVector next = transport(psi0, (n + 1) * dt, params, p_a);
    const OverlapPhase overlap = overlap_phase(prev, next);
    rows.push_back({n, n * dt, overlap.phase, overlap.magnitude});
    prev = next;
  }
  return rows;
}

void write_residuals_csv(std::ostream& out, const std::vector<TransportResidual>& rows) {
  out << "step,t,phase_rad,overlap_magnitude\n";
  char buf[128];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.12g,", row.step, row.t);
    out << buf;
    if (row.phase.has_value()) {
      std::snprintf(buf, sizeof(buf), "%.12g", *row.phase);
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), ",%.12g\n", row.magnitude);
    out << buf;
  }
}

}  // namespace uhlmann
