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

#include "qnn/gate.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qnn {

using Amplitude = std::complex<double>;

struct NamedRegister {
    std::string name;
    std::vector<Qubit> qubits;

    friend bool operator==(const NamedRegister &,
                           const NamedRegister &) = default;
};

/**
 * Ordered gate list over a fixed number of qubits.
 *
 * An optional direct amplitude initialization replaces the all-zero start
 * state; it always precedes every gate. Registers and measured qubits are
 * descriptive metadata carried through serialization.
 */
class Circuit {
  public:
    explicit Circuit(std::size_t qubit_count);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] const std::optional<std::vector<Amplitude>> &
    init() const noexcept {
        return init_;
    }
    [[nodiscard]] const std::vector<NamedRegister> &
    registers() const noexcept {
        return registers_;
    }
    [[nodiscard]] const std::vector<Qubit> &measured() const noexcept {
        return measured_;
    }

    /// Validates and appends.
    void append(const Gate &gate);
    void append(const std::vector<Gate> &gates);

    /// Sets the start state. Requires length 2^n, unit L2 norm within 1e-10,
    /// and no gates appended yet.
    void set_init(std::vector<Amplitude> amplitudes);

    void add_register(std::string name, std::vector<Qubit> qubits);
    void set_measured(std::vector<Qubit> qubits);

    [[nodiscard]] const NamedRegister *find_register(const std::string &name) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_;
    std::optional<std::vector<Amplitude>> init_;
    std::vector<Gate> gates_;
    std::vector<NamedRegister> registers_;
    std::vector<Qubit> measured_;
};

} // namespace qnn
