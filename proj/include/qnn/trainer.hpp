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

#include "qnn/ingest.hpp"
#include "qnn/model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qnn {

struct TrainOptions {
    std::uint64_t seed = 0;
    std::size_t max_iters = 500;
    std::size_t restarts = 1;
    /// Worker threads for restarts; 0 picks hardware concurrency.
    std::size_t threads = 1;
};

struct TrainResult {
    QNNModel model;
    /// Training accuracy of the current model after each iteration; entry 0
    /// is the initial model. Non-decreasing.
    std::vector<double> trace;
    std::size_t restart = 0;
};

/// Fraction of items classified correctly by the closed-form network.
[[nodiscard]] double train_accuracy(const QNNModel &model,
                                    std::span<const LabeledInput> items);

/// Seeded random model: +-1 weights, random flags, norm_para on the 0.05 grid.
[[nodiscard]] QNNModel random_model(std::uint64_t seed);

/**
 * Hill climbing over single-entry weight flips, flag toggles and +-0.05
 * norm_para steps. Non-worsening moves are accepted. Each restart r runs
 * from its own seed; the best final accuracy wins, ties to the lowest r.
 */
[[nodiscard]] TrainResult local_search(std::span<const LabeledInput> train,
                                       const TrainOptions &options);

} // namespace qnn
