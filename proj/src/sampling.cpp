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

#include "qnn/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnn {

std::string to_bitstring(std::size_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if ((index >> q) & 1U) {
            s[n - 1 - q] = '1';
        }
    }
    return s;
}

std::size_t from_bitstring(const std::string &bits) {
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring '" + bits +
                                        "' has a non-binary character");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return index;
}

CountsMap sample_counts(const StateVector &state, std::uint64_t shots,
                        std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    // Draws scale by the accumulated total so rounding in the sum cannot
    // push a draw past the last bin.
    std::vector<std::uint64_t> hits(amps.size(), 0);
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        ++hits[static_cast<std::size_t>(it - cdf.begin())];
    }
    CountsMap counts;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] != 0) {
            counts.emplace(to_bitstring(i, state.qubit_count()), hits[i]);
        }
    }
    return counts;
}

CountsMap project_counts(const CountsMap &counts,
                         std::span<const Qubit> qubits) {
    CountsMap out;
    for (const auto &[bits, count] : counts) {
        const std::size_t n = bits.size();
        std::string key(qubits.size(), '0');
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            if (qubits[k] >= n) {
                throw std::out_of_range("projected qubit out of range");
            }
            key[qubits.size() - 1 - k] = bits[n - 1 - qubits[k]];
        }
        out[key] += count;
    }
    return out;
}

std::vector<double> analyze(const CountsMap &counts, std::size_t n) {
    std::vector<double> freq(n, 0.0);
    std::uint64_t total = 0;
    for (const auto &[bits, count] : counts) {
        if (bits.size() != n) {
            throw std::invalid_argument("bitstring '" + bits +
                                        "' does not have length " +
                                        std::to_string(n));
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (bits[n - 1 - q] == '1') {
                freq[q] += static_cast<double>(count);
            }
        }
        total += count;
    }
    if (total == 0) {
        throw std::invalid_argument("counts are empty");
    }
    for (double &f : freq) {
        f /= static_cast<double>(total);
    }
    return freq;
}

} // namespace qnn
