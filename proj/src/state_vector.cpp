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

#include "qnn/state_vector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qnn {

namespace {

// Opens a zero at position `bit`, shifting the higher bits of k up by one.
inline std::size_t insert_zero_bit(std::size_t k, Qubit bit) noexcept {
    const std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

} // namespace

StateVector::StateVector(std::size_t qubit_count)
    : n_(qubit_count), amps_(std::size_t{1} << qubit_count) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t qubit_count,
                         std::vector<Amplitude> amplitudes)
    : n_(qubit_count), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n_)) {
        throw std::invalid_argument("amplitude count must be 2^n");
    }
    if (!(std::abs(norm_squared() - 1.0) <= 1e-10)) {
        throw std::invalid_argument("state vector must have unit norm");
    }
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const Amplitude &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::apply(const Gate &gate) {
    validate_gate(gate, n_);
    const auto &q = gate.qubits;
    switch (gate.kind) {
    case GateKind::X:
        apply_x(q[0]);
        break;
    case GateKind::H:
        apply_h(q[0]);
        break;
    case GateKind::Z:
        apply_z(q[0]);
        break;
    case GateKind::RY:
        apply_ry(q[0], gate.angle);
        break;
    case GateKind::CX:
        apply_cx(q[0], q[1]);
        break;
    case GateKind::CZ:
        apply_cz(q[0], q[1]);
        break;
    case GateKind::CCX:
        apply_ccx(q[0], q[1], q[2]);
        break;
    }
}

void StateVector::apply_x(Qubit q) {
    const std::size_t half = amps_.size() >> 1;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(k, q);
        std::swap(amps_[i0], amps_[i0 | bit]);
    }
}

void StateVector::apply_h(Qubit q) {
    const std::size_t half = amps_.size() >> 1;
    const std::size_t bit = std::size_t{1} << q;
    const double r = std::numbers::sqrt2 / 2.0;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(k, q);
        const Amplitude a0 = amps_[i0];
        const Amplitude a1 = amps_[i0 | bit];
        amps_[i0] = r * (a0 + a1);
        amps_[i0 | bit] = r * (a0 - a1);
    }
}

void StateVector::apply_z(Qubit q) {
    const std::size_t half = amps_.size() >> 1;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i1 = insert_zero_bit(k, q) | bit;
        amps_[i1] = -amps_[i1];
    }
}

void StateVector::apply_ry(Qubit q, double theta) {
    const std::size_t half = amps_.size() >> 1;
    const std::size_t bit = std::size_t{1} << q;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(k, q);
        const Amplitude a0 = amps_[i0];
        const Amplitude a1 = amps_[i0 | bit];
        amps_[i0] = c * a0 - s * a1;
        amps_[i0 | bit] = s * a0 + c * a1;
    }
}

void StateVector::apply_cx(Qubit c, Qubit t) {
    const std::size_t quarter = amps_.size() >> 2;
    const Qubit lo = std::min(c, t);
    const Qubit hi = std::max(c, t);
    const std::size_t cbit = std::size_t{1} << c;
    const std::size_t tbit = std::size_t{1} << t;
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t i = insert_zero_bit(insert_zero_bit(k, lo), hi) | cbit;
        std::swap(amps_[i], amps_[i | tbit]);
    }
}

void StateVector::apply_cz(Qubit a, Qubit b) {
    const std::size_t quarter = amps_.size() >> 2;
    const Qubit lo = std::min(a, b);
    const Qubit hi = std::max(a, b);
    const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t i = insert_zero_bit(insert_zero_bit(k, lo), hi) | both;
        amps_[i] = -amps_[i];
    }
}

void StateVector::apply_ccx(Qubit c0, Qubit c1, Qubit t) {
    const std::size_t eighth = amps_.size() >> 3;
    std::array<Qubit, 3> sorted{c0, c1, t};
    std::sort(sorted.begin(), sorted.end());
    const std::size_t cbits = (std::size_t{1} << c0) | (std::size_t{1} << c1);
    const std::size_t tbit = std::size_t{1} << t;
    for (std::size_t k = 0; k < eighth; ++k) {
        std::size_t i = insert_zero_bit(k, sorted[0]);
        i = insert_zero_bit(i, sorted[1]);
        i = insert_zero_bit(i, sorted[2]) | cbits;
        std::swap(amps_[i], amps_[i | tbit]);
    }
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

StateVector run(const Circuit &circuit) {
    StateVector state =
        circuit.init() ? StateVector(circuit.qubit_count(), *circuit.init())
                       : StateVector(circuit.qubit_count());
    for (const Gate &g : circuit.gates()) {
        state.apply(g);
    }
    return state;
}

double marginal_prob_one(const StateVector &state, Qubit qubit) {
    if (qubit >= state.qubit_count()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) +
                                " out of range");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

std::vector<double> marginals(const StateVector &state) {
    std::vector<double> p(state.qubit_count(), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double w = std::norm(amps[i]);
        if (w == 0.0) {
            continue;
        }
        for (std::size_t q = 0; q < p.size(); ++q) {
            if ((i >> q) & 1U) {
                p[q] += w;
            }
        }
    }
    return p;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state sizes differ");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace qnn
