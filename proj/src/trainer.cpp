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

#include "qnn/trainer.hpp"

#include "qnn/oracle.hpp"
#include "qnn/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace qnn {

namespace {

constexpr int kParaSteps = 20; // norm_para = k / 20
constexpr std::size_t kW1Moves = kHiddenNeurons * kEncodedSize;
constexpr std::size_t kW2Moves = kOutputNeurons * kHiddenNeurons;
constexpr std::size_t kFlagMoves = kOutputNeurons;
constexpr std::size_t kParaMoves = 2 * kOutputNeurons;
constexpr std::size_t kMoveCount = kW1Moves + kW2Moves + kFlagMoves + kParaMoves;

struct SearchState {
    QNNModel model;
    std::array<int, kOutputNeurons> para_step{};

    void sync() {
        for (std::size_t j = 0; j < kOutputNeurons; ++j) {
            model.norm_para[j] = static_cast<double>(para_step[j]) / kParaSteps;
        }
    }
};

int random_sign(SplitMix64 &rng) { return (rng.next() >> 63) != 0 ? 1 : -1; }

SearchState initial_state(SplitMix64 &rng) {
    SearchState s;
    for (auto &row : s.model.w1) {
        for (int &w : row) {
            w = random_sign(rng);
        }
    }
    for (auto &row : s.model.w2) {
        for (int &w : row) {
            w = random_sign(rng);
        }
    }
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        s.model.norm_flag[j] = (rng.next() >> 63) != 0;
        s.para_step[j] = static_cast<int>(rng.below(kParaSteps + 1));
    }
    s.sync();
    return s;
}

// Returns false when the move would leave the norm_para grid.
bool apply_move(SearchState &s, std::size_t move) {
    if (move < kW1Moves) {
        int &w = s.model.w1[move / kEncodedSize][move % kEncodedSize];
        w = -w;
        return true;
    }
    move -= kW1Moves;
    if (move < kW2Moves) {
        int &w = s.model.w2[move / kHiddenNeurons][move % kHiddenNeurons];
        w = -w;
        return true;
    }
    move -= kW2Moves;
    if (move < kFlagMoves) {
        s.model.norm_flag[move] = !s.model.norm_flag[move];
        return true;
    }
    move -= kFlagMoves;
    const std::size_t j = move / 2;
    const int step = (move % 2 == 0) ? 1 : -1;
    const int next = s.para_step[j] + step;
    if (next < 0 || next > kParaSteps) {
        return false;
    }
    s.para_step[j] = next;
    s.sync();
    return true;
}

TrainResult search_once(std::span<const LabeledInput> train,
                        std::uint64_t seed, std::size_t max_iters,
                        std::size_t restart) {
    SplitMix64 rng(seed);
    SearchState current = initial_state(rng);
    double accuracy = train_accuracy(current.model, train);
    TrainResult result;
    result.restart = restart;
    result.trace.reserve(max_iters + 1);
    result.trace.push_back(accuracy);
    for (std::size_t it = 0; it < max_iters; ++it) {
        SearchState candidate = current;
        if (apply_move(candidate, rng.below(kMoveCount))) {
            const double acc = train_accuracy(candidate.model, train);
            if (acc >= accuracy) {
                current = candidate;
                accuracy = acc;
            }
        }
        result.trace.push_back(accuracy);
    }
    result.model = current.model;
    return result;
}

} // namespace

double train_accuracy(const QNNModel &model, std::span<const LabeledInput> items) {
    if (items.empty()) {
        throw std::invalid_argument("accuracy of an empty set is undefined");
    }
    std::size_t correct = 0;
    for (const LabeledInput &item : items) {
        const auto probs = oracle::closed_form_network(item.input, model);
        if (oracle::classify(probs.final_output) == item.label) {
            ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(items.size());
}

QNNModel random_model(std::uint64_t seed) {
    SplitMix64 rng(seed);
    return initial_state(rng).model;
}

TrainResult local_search(std::span<const LabeledInput> train,
                         const TrainOptions &options) {
    if (train.empty()) {
        throw std::invalid_argument("training set is empty");
    }
    const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
    std::vector<TrainResult> results(restarts);

    std::size_t workers = options.threads == 0 ? std::thread::hardware_concurrency()
                                               : options.threads;
    workers = std::clamp<std::size_t>(workers, 1, restarts);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t r = next++; r < restarts; r = next++) {
            results[r] = search_once(train, options.seed + r, options.max_iters, r);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r) {
        if (results[r].trace.back() > results[best].trace.back()) {
            best = r;
        }
    }
    return std::move(results[best]);
}

} // namespace qnn
