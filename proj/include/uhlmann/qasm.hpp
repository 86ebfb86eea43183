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

#include <string>
#include <string_view>
#include <vector>

#include "uhlmann/circuit.hpp"

namespace uhlmann {

/// OPENQASM 2.0 syntax or unsupported-construct error with source position.
struct QasmParseError : std::runtime_error {
  QasmParseError(const std::string& message, int line, int column)
      : std::runtime_error("qasm:" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct QasmEmitOptions {
  int qreg_size = 5;  // the hardware declares five wires even for three-qubit runs
  int creg_size = 5;
  bool full_precision = false;  // %.17g instead of the default 6 significant digits
  /// Circuit wire -> hardware wire. Empty means identity.
  std::vector<int> wire_map;
};

/// Emits the supported subset (u3/cx/h/sdg/barrier/measure). Ry gates are
/// printed as u3(angle,0,0); barriers span every declared wire. LF line
/// endings; angles use the shortest representation within the precision mode.
std::string emit_qasm(const Circuit& circuit, const QasmEmitOptions& options = {});

/// Parses the same subset back into a Circuit sized by the qreg declaration.
/// u3 gates must have zero second and third angles (anything else in the
/// grammar is an unsupported construct).
Circuit parse_qasm(std::string_view text);

}  // namespace uhlmann
