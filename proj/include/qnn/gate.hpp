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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qnn {

using Qubit = std::size_t;

enum class GateKind : std::uint8_t { X, H, Z, RY, CX, CZ, CCX };

/// Compile-time annotation naming the circuit section a gate belongs to.
enum class Stage : std::uint8_t {
    None,
    Prep,
    Sign,
    Quadratic,
    Output,
    Norm,
};

struct StageTag {
    Stage stage = Stage::None;
    /// Neuron the gate was emitted for; -1 when not tied to a neuron.
    std::int8_t neuron = -1;

    friend bool operator==(const StageTag &, const StageTag &) = default;
};

[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;
[[nodiscard]] std::size_t gate_arity(GateKind kind) noexcept;
[[nodiscard]] std::string_view stage_name(Stage stage) noexcept;

/**
 * One elementary gate. Qubits are stored controls first, target last; CZ is
 * symmetric so its order only matters for printing.
 */
struct Gate {
    GateKind kind = GateKind::X;
    std::array<Qubit, 3> qubits{};
    double angle = 0.0;
    StageTag tag{};

    [[nodiscard]] std::size_t arity() const noexcept {
        return gate_arity(kind);
    }
    [[nodiscard]] Qubit target() const noexcept { return qubits[arity() - 1]; }

    static Gate x(Qubit q) { return {GateKind::X, {q, 0, 0}}; }
    static Gate h(Qubit q) { return {GateKind::H, {q, 0, 0}}; }
    static Gate z(Qubit q) { return {GateKind::Z, {q, 0, 0}}; }
    static Gate ry(Qubit q, double theta) {
        return {GateKind::RY, {q, 0, 0}, theta};
    }
    static Gate cx(Qubit control, Qubit target) {
        return {GateKind::CX, {control, target, 0}};
    }
    static Gate cz(Qubit a, Qubit b) { return {GateKind::CZ, {a, b, 0}}; }
    static Gate ccx(Qubit c0, Qubit c1, Qubit target) {
        return {GateKind::CCX, {c0, c1, target}};
    }

    /// Equal kind, qubits, bit-identical angle and tag.
    friend bool operator==(const Gate &a, const Gate &b);
};

/// Throws std::out_of_range if any qubit >= qubit_count and
/// std::invalid_argument on repeated qubits or a non-finite angle.
void validate_gate(const Gate &gate, std::size_t qubit_count);

} // namespace qnn
