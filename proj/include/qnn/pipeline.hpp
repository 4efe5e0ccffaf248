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

#include "qnn/compiler.hpp"
#include "qnn/ingest.hpp"
#include "qnn/sampling.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qnn {

struct InferenceOptions {
    /// 0 selects exact marginals instead of sampling.
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    PrepMode prep = PrepMode::Direct;
};

struct InferenceResult {
    /// Per-class probability: exact marginal of each final qubit, or its
    /// empirical frequency when sampling.
    std::array<double, kOutputNeurons> probabilities{};
    /// Counts over the measured qubits (final_out[1] leftmost); sampling only.
    std::optional<CountsMap> counts;
    std::size_t predicted = 0;
};

/// Compile, simulate, measure, classify one input.
[[nodiscard]] InferenceResult infer(const EncodedInput &x, const QNNModel &model,
                                    const InferenceOptions &options);

/// Per-image seed derived from the run seed so results do not depend on
/// processing order.
[[nodiscard]] std::uint64_t image_seed(std::uint64_t seed, std::size_t index) noexcept;

/// Runs `infer` over all items on `threads` workers (0 = hardware
/// concurrency). Results are in input order. Item k uses
/// image_seed(options.seed, k).
[[nodiscard]] std::vector<InferenceResult>
infer_batch(std::span<const LabeledInput> items, const QNNModel &model,
            const InferenceOptions &options, std::size_t threads = 0);

} // namespace qnn
