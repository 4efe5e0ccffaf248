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

#include "qnn/circuit.hpp"
#include "qnn/gate.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qnn {

/**
 * Pure n-qubit state as 2^n complex amplitudes.
 *
 * Basis index i has qubit 0 as its least-significant bit. Gate kernels walk
 * the amplitude array with bit-insertion strides and never build a matrix.
 */
class StateVector {
  public:
    /// |0...0>
    explicit StateVector(std::size_t qubit_count);
    /// Requires length 2^n and unit norm within 1e-10.
    StateVector(std::size_t qubit_count, std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }

    void apply(const Gate &gate);

    [[nodiscard]] double norm_squared() const noexcept;

  private:
    void apply_x(Qubit q);
    void apply_h(Qubit q);
    void apply_z(Qubit q);
    void apply_ry(Qubit q, double theta);
    void apply_cx(Qubit c, Qubit t);
    void apply_cz(Qubit a, Qubit b);
    void apply_ccx(Qubit c0, Qubit c1, Qubit t);

    std::size_t n_;
    std::vector<Amplitude> amps_;
};

[[nodiscard]] StateVector apply_gate(StateVector state, const Gate &gate);

/// Applies the circuit's init (or starts from |0...0>) then every gate.
[[nodiscard]] StateVector run(const Circuit &circuit);

/// Probability that `qubit` measures 1.
[[nodiscard]] double marginal_prob_one(const StateVector &state, Qubit qubit);

/// All per-qubit one-probabilities in a single pass.
[[nodiscard]] std::vector<double> marginals(const StateVector &state);

/// max_i |a_i - b_i|; the states must have equal size.
[[nodiscard]] double max_abs_diff(const StateVector &a, const StateVector &b);

} // namespace qnn
