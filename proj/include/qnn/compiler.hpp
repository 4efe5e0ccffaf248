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
 * Compiles a QNNModel and one EncodedInput into an explicit gate circuit.
 *
 * Each hidden neuron owns a 4-qubit input register loaded with the same
 * image, flips the sign of the amplitudes whose weight is -1, and extracts
 * the squared weighted sum onto its hidden qubit through a Hadamard layer
 * and a 4-controlled X. Output neurons treat the two hidden qubits as
 * independent random variables: a Toffoli multiplies them (X-conjugated
 * where the weight is -1), and a biased normalization qubit is ANDed or
 * ORed in.
 */
#pragma once

#include "qnn/circuit.hpp"
#include "qnn/encoding.hpp"
#include "qnn/model.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace qnn {

/// Qubits used by one hidden neuron.
struct NeuronWiring {
    std::array<Qubit, kEncodedQubits> input;
    Qubit hidden;
    std::array<Qubit, 2> aux;
};

/// Qubits used by one output neuron.
struct OutputWiring {
    std::array<Qubit, kHiddenNeurons> hidden;
    Qubit raw;
    Qubit norm;
    Qubit final_out;
};

/**
 * The 18-qubit network layout:
 *   in0 0-3, in1 4-7, aux 8-9, hidden 10-11, raw 12-13, norm 14-15,
 *   final 16-17.
 */
struct RegisterLayout {
    std::array<std::array<Qubit, kEncodedQubits>, kHiddenNeurons> input;
    std::array<Qubit, 2> aux;
    std::array<Qubit, kHiddenNeurons> hidden;
    std::array<Qubit, kOutputNeurons> raw;
    std::array<Qubit, kOutputNeurons> norm;
    std::array<Qubit, kOutputNeurons> final_out;

    static RegisterLayout standard() noexcept;
    [[nodiscard]] std::size_t qubit_count() const noexcept;
    [[nodiscard]] NeuronWiring hidden_neuron(std::size_t i) const;
    [[nodiscard]] OutputWiring output_neuron(std::size_t j) const;
};

enum class PrepMode { Direct, Synth };

/// Phase -1 on the component where c0 = c1 = c2 = target = 1.
[[nodiscard]] std::vector<Gate> cccz(Qubit c0, Qubit c1, Qubit c2,
                                     Qubit target, Qubit aux0, Qubit aux1);

/// Flips target iff all four controls are 1.
[[nodiscard]] std::vector<Gate> ccccx(std::span<const Qubit, 4> controls,
                                      Qubit target, Qubit aux0, Qubit aux1);

/// Gate cost of negating basis state `index` of the 4-qubit register:
/// two X per zero bit plus the 5-gate cccz.
[[nodiscard]] std::size_t sign_flip_cost(std::size_t index) noexcept;

/**
 * Indices whose amplitude the sign stage negates. Starts from the -1
 * weights; when the complement set is strictly cheaper to compile it is
 * used instead (a global sign is invisible after squaring).
 */
[[nodiscard]] std::vector<std::size_t>
effective_sign_set(std::span<const int, kEncodedSize> weights,
                   bool majority_optimization = true);

/// Negates the amplitudes of `effective_sign_set(weights)`.
[[nodiscard]] std::vector<Gate>
compile_sign_stage(std::span<const int, kEncodedSize> weights,
                   std::span<const Qubit, kEncodedQubits> reg,
                   std::span<const Qubit, 2> aux,
                   bool majority_optimization = true);

/// H and X on every register qubit, then ccccx into `hidden`.
[[nodiscard]] std::vector<Gate>
compile_quadratic_stage(std::span<const Qubit, kEncodedQubits> reg,
                        Qubit hidden, std::span<const Qubit, 2> aux);

/// State preparation (synthesized), sign stage, quadratic stage. Gates are
/// tagged with `neuron`.
[[nodiscard]] std::vector<Gate>
compile_hidden_neuron(const EncodedInput &x,
                      std::span<const int, kEncodedSize> weights,
                      const NeuronWiring &wiring, int neuron,
                      PrepMode prep = PrepMode::Synth);
[[nodiscard]] std::vector<Gate>
compile_hidden_neuron(const EncodedInput &x,
                      std::span<const int, kEncodedSize> weights,
                      const RegisterLayout &layout, std::size_t neuron);

/**
 * Output neuron j: X on hidden_i where weights[i] = -1, Toffoli into raw,
 * undo the X; RY(2 asin sqrt(norm_para)) on the norm qubit; final = raw AND
 * norm when norm_flag is set, raw OR norm otherwise.
 */
[[nodiscard]] std::vector<Gate>
compile_output_neuron(std::span<const int, kHiddenNeurons> weights,
                      bool norm_flag, double norm_para,
                      const OutputWiring &wiring, int neuron);

/// The full 18-qubit network. Direct prep loads both input registers
/// through the circuit's amplitude init instead of gates.
[[nodiscard]] Circuit compile_network(const EncodedInput &x,
                                      const QNNModel &model,
                                      PrepMode prep = PrepMode::Synth);

struct StageCount {
    StageTag tag;
    std::size_t count = 0;
};

struct GateCountReport {
    /// One entry per (stage, neuron) in order of first appearance.
    std::vector<StageCount> entries;
    std::size_t total = 0;

    [[nodiscard]] std::size_t stage_total(Stage stage) const noexcept;
    [[nodiscard]] std::size_t count(Stage stage, int neuron) const noexcept;
};

[[nodiscard]] GateCountReport gate_count_report(const Circuit &circuit);
[[nodiscard]] GateCountReport gate_count_report(std::span<const Gate> gates);

} // namespace qnn
