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

#include "qnn/encoding.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace qnn {

inline constexpr std::size_t kHiddenNeurons = 2;
inline constexpr std::size_t kOutputNeurons = 2;

/**
 * Fixed 16-2-2 binary-weight network. Weights are exactly -1 or +1; each
 * output neuron carries a normalization flag and a parameter in [0, 1].
 */
struct QNNModel {
    using HiddenRow = std::array<int, kEncodedSize>;
    using OutputRow = std::array<int, kHiddenNeurons>;

    std::array<HiddenRow, kHiddenNeurons> w1{};
    std::array<OutputRow, kOutputNeurons> w2{};
    std::array<bool, kOutputNeurons> norm_flag{};
    std::array<double, kOutputNeurons> norm_para{};

    friend bool operator==(const QNNModel &, const QNNModel &) = default;
};

/// Throws ValidationError naming the offending field, e.g. "W1[0][5]".
void validate_model(const QNNModel &model);

/// Throws ValidationError unless every entry is -1 or +1.
void validate_weights(std::span<const int> weights, const char *field);

} // namespace qnn
