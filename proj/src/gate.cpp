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

#include "qnn/gate.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qnn {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::Z:
        return "z";
    case GateKind::RY:
        return "ry";
    case GateKind::CX:
        return "cx";
    case GateKind::CZ:
        return "cz";
    case GateKind::CCX:
        return "ccx";
    }
    return "?";
}

std::size_t gate_arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
        return 2;
    case GateKind::CCX:
        return 3;
    default:
        return 1;
    }
}

std::string_view stage_name(Stage stage) noexcept {
    switch (stage) {
    case Stage::None:
        return "none";
    case Stage::Prep:
        return "prep";
    case Stage::Sign:
        return "sign";
    case Stage::Quadratic:
        return "quadratic";
    case Stage::Output:
        return "output";
    case Stage::Norm:
        return "norm";
    }
    return "?";
}

bool operator==(const Gate &a, const Gate &b) {
    if (a.kind != b.kind || !(a.tag == b.tag)) {
        return false;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a.qubits[i] != b.qubits[i]) {
            return false;
        }
    }
    return std::bit_cast<std::uint64_t>(a.angle) ==
           std::bit_cast<std::uint64_t>(b.angle);
}

void validate_gate(const Gate &gate, std::size_t qubit_count) {
    const std::size_t n = gate.arity();
    for (std::size_t i = 0; i < n; ++i) {
        if (gate.qubits[i] >= qubit_count) {
            throw std::out_of_range(std::string(gate_name(gate.kind)) +
                                    ": qubit " +
                                    std::to_string(gate.qubits[i]) +
                                    " out of range for " +
                                    std::to_string(qubit_count) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.qubits[i] == gate.qubits[j]) {
                throw std::invalid_argument(
                    std::string(gate_name(gate.kind)) + ": repeated qubit " +
                    std::to_string(gate.qubits[i]));
            }
        }
    }
    if (!std::isfinite(gate.angle)) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                    ": non-finite angle");
    }
}

} // namespace qnn
