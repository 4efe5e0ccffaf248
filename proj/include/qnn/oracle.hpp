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
 * Verification paths that share no code with the optimized kernels or the
 * compiler: a dense-matrix simulator and the closed-form network model.
 */
#pragma once

#include "qnn/circuit.hpp"
#include "qnn/encoding.hpp"
#include "qnn/model.hpp"
#include "qnn/state_vector.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace qnn::oracle {

inline constexpr std::size_t kMaxNaiveQubits = 10;

/// Builds each gate as a full 2^n x 2^n matrix from Kronecker products of
/// 2x2 blocks and multiplies it into the state. At most 10 qubits.
[[nodiscard]] StateVector naive_run(const Circuit &circuit);

/// Dense 2^n x 2^n matrix of one gate, row-major.
[[nodiscard]] std::vector<Amplitude> dense_gate_matrix(const Gate &gate,
                                                       std::size_t qubit_count);

struct NetworkProbabilities {
    std::array<double, kHiddenNeurons> hidden{};
    std::array<double, kOutputNeurons> raw_output{};
    std::array<double, kOutputNeurons> final_output{};
};

/// hidden_i = (sum_k W1[i,k] x_k)^2 / 16
[[nodiscard]] double hidden_probability(const EncodedInput &x,
                                        std::span<const int, kEncodedSize> w);

/// prod_i (h_i if w_i = +1 else 1 - h_i)
[[nodiscard]] double raw_probability(std::span<const double, kHiddenNeurons> hidden,
                                     std::span<const int, kHiddenNeurons> w);

/// raw * gamma when flag is set, else 1 - (1 - raw)(1 - gamma).
[[nodiscard]] double normalized_probability(double raw, bool flag, double gamma);

[[nodiscard]] NetworkProbabilities closed_form_network(const EncodedInput &x,
                                                       const QNNModel &model);

/// Index of the largest entry; ties go to the lowest index.
[[nodiscard]] std::size_t classify(std::span<const double> probabilities);

} // namespace qnn::oracle
