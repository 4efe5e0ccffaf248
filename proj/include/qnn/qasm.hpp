// Copyright 2026 The qnn-circuit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * OpenQASM 2.0 text for circuits over {x, h, z, ry, cx, cz, ccx}.
 *
 * The exporter writes one statement per line: version header, qelib1
 * include, a single `q` register, an optional `c` register with measure
 * statements at the end, and structured comments that carry register names
 * (`// register NAME: i j ...`) and stage annotations
 * (`// stage STAGE NEURON`). The parser accepts exactly that subset and
 * restores the circuit gate for gate, annotations included.
 */
#pragma once

#include "qnn/circuit.hpp"

#include <string>
#include <string_view>

namespace qnn {

/// Throws std::invalid_argument if the circuit has a direct amplitude init.
[[nodiscard]] std::string export_qasm(const Circuit &circuit);

/// Throws ParseError with line and column on any rejected statement.
[[nodiscard]] Circuit parse_qasm(std::string_view text);

} // namespace qnn
