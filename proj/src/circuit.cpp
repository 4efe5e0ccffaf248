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

#include "qnn/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace qnn {

namespace {
constexpr std::size_t kMaxQubits = 24;

void check_qubits(const std::vector<Qubit> &qubits, std::size_t n,
                  const std::string &what) {
    for (Qubit q : qubits) {
        if (q >= n) {
            throw std::out_of_range(what + ": qubit " + std::to_string(q) +
                                    " out of range");
        }
    }
}
} // namespace

Circuit::Circuit(std::size_t qubit_count) : n_(qubit_count) {
    if (qubit_count == 0 || qubit_count > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count must be in [1, 24]");
    }
}

void Circuit::append(const Gate &gate) {
    validate_gate(gate, n_);
    gates_.push_back(gate);
}

void Circuit::append(const std::vector<Gate> &gates) {
    for (const Gate &g : gates) {
        append(g);
    }
}

void Circuit::set_init(std::vector<Amplitude> amplitudes) {
    if (!gates_.empty()) {
        throw std::logic_error("amplitude init must precede all gates");
    }
    if (amplitudes.size() != (std::size_t{1} << n_)) {
        throw std::invalid_argument("init vector length must be 2^n");
    }
    double norm = 0.0;
    for (const Amplitude &a : amplitudes) {
        norm += std::norm(a);
    }
    if (!(std::abs(norm - 1.0) <= 1e-10)) {
        throw std::invalid_argument("init vector must have unit norm");
    }
    init_ = std::move(amplitudes);
}

void Circuit::add_register(std::string name, std::vector<Qubit> qubits) {
    check_qubits(qubits, n_, "register " + name);
    registers_.push_back({std::move(name), std::move(qubits)});
}

void Circuit::set_measured(std::vector<Qubit> qubits) {
    check_qubits(qubits, n_, "measurement");
    measured_ = std::move(qubits);
}

const NamedRegister *Circuit::find_register(const std::string &name) const {
    for (const NamedRegister &r : registers_) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

} // namespace qnn
