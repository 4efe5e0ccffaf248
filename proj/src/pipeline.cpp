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

#include "qnn/pipeline.hpp"

#include "qnn/oracle.hpp"
#include "qnn/state_vector.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace qnn {

InferenceResult infer(const EncodedInput &x, const QNNModel &model,
                      const InferenceOptions &options) {
    const Circuit circuit = compile_network(x, model, options.prep);
    const StateVector state = run(circuit);
    const auto &measured = circuit.measured();

    InferenceResult result;
    if (options.shots == 0) {
        for (std::size_t j = 0; j < kOutputNeurons; ++j) {
            result.probabilities[j] = marginal_prob_one(state, measured[j]);
        }
    } else {
        const CountsMap full = sample_counts(state, options.shots, options.seed);
        CountsMap counts = project_counts(full, measured);
        const auto freq = analyze(counts, measured.size());
        std::copy_n(freq.begin(), kOutputNeurons, result.probabilities.begin());
        result.counts = std::move(counts);
    }
    result.predicted = oracle::classify(result.probabilities);
    return result;
}

std::uint64_t image_seed(std::uint64_t seed, std::size_t index) noexcept {
    SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    return mix.next();
}

std::vector<InferenceResult> infer_batch(std::span<const LabeledInput> items,
                                         const QNNModel &model,
                                         const InferenceOptions &options,
                                         std::size_t threads) {
    std::vector<InferenceResult> results(items.size());
    if (items.empty()) {
        return results;
    }
    std::size_t workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    workers = std::clamp<std::size_t>(workers, 1, items.size());

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
        try {
            for (std::size_t k = next++; k < items.size(); k = next++) {
                InferenceOptions local = options;
                local.seed = image_seed(options.seed, k);
                results[k] = infer(items[k].input, model, local);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next = items.size();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back(work);
        }
        work();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return results;
}

} // namespace qnn
