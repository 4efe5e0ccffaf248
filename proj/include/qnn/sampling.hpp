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

#include "qnn/state_vector.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qnn {

/**
 * SplitMix64 (Steele, Lea, Flood 2014). The state is the seed itself; every
 * call adds the golden-ratio increment and returns a mixed copy.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r = next();
        while (r >= limit) {
            r = next();
        }
        return r % bound;
    }

  private:
    std::uint64_t state_;
};

/// Bitstring (qubit n-1 leftmost) -> count. Ordered, so iteration and
/// serialization are deterministic.
using CountsMap = std::map<std::string, std::uint64_t>;

/// Renders basis index `index` over `n` qubits, qubit n-1 leftmost.
[[nodiscard]] std::string to_bitstring(std::size_t index, std::size_t n);
/// Inverse of to_bitstring; throws std::invalid_argument on non-binary chars.
[[nodiscard]] std::size_t from_bitstring(const std::string &bits);

/**
 * Draws `shots` basis states from |amplitude|^2 by inverse CDF over the
 * cumulative probabilities in ascending basis order. Deterministic in
 * (state, shots, seed). shots == 0 throws std::invalid_argument.
 */
[[nodiscard]] CountsMap sample_counts(const StateVector &state,
                                      std::uint64_t shots, std::uint64_t seed);

/// Reduces full-register counts to the listed qubits. In the result,
/// `qubits[k]` becomes bit k (so qubits.back() is leftmost).
[[nodiscard]] CountsMap project_counts(const CountsMap &counts,
                                       std::span<const Qubit> qubits);

/// Per-qubit frequency of measuring 1. Every key must have length n.
[[nodiscard]] std::vector<double> analyze(const CountsMap &counts,
                                          std::size_t n);

} // namespace qnn
