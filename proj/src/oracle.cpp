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

#include "qnn/oracle.hpp"

#include "qnn/error.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnn::oracle {

namespace {

using Block = std::array<Amplitude, 4>; // 2x2 row-major

constexpr Block kIdentity{1.0, 0.0, 0.0, 1.0};
constexpr Block kProj0{1.0, 0.0, 0.0, 0.0};
constexpr Block kProj1{0.0, 0.0, 0.0, 1.0};
constexpr Block kPauliX{0.0, 1.0, 1.0, 0.0};
constexpr Block kPauliZ{1.0, 0.0, 0.0, -1.0};

Block hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, r, r, -r};
}

Block ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {c, -s, s, c};
}

// One Kronecker term: a 2x2 block per qubit, identity where unset.
struct Term {
    std::vector<Block> per_qubit;
};

std::vector<Amplitude> kron_term(const Term &term) {
    // Qubit n-1 is the leftmost Kronecker factor so that qubit 0 ends up as
    // the least-significant index bit.
    std::vector<Amplitude> m{1.0};
    std::size_t dim = 1;
    for (std::size_t q = term.per_qubit.size(); q-- > 0;) {
        const Block &b = term.per_qubit[q];
        std::vector<Amplitude> next(dim * 2 * dim * 2);
        const std::size_t nd = dim * 2;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                const Amplitude a = m[r * dim + c];
                if (a == 0.0) {
                    continue;
                }
                for (std::size_t br = 0; br < 2; ++br) {
                    for (std::size_t bc = 0; bc < 2; ++bc) {
                        next[(r * 2 + br) * nd + (c * 2 + bc)] =
                            a * b[br * 2 + bc];
                    }
                }
            }
        }
        m = std::move(next);
        dim = nd;
    }
    return m;
}

std::vector<Term> gate_terms(const Gate &gate, std::size_t n) {
    auto make = [n]() { return Term{std::vector<Block>(n, kIdentity)}; };
    const auto &q = gate.qubits;
    std::vector<Term> terms;
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Z:
    case GateKind::RY: {
        Term t = make();
        t.per_qubit[q[0]] = gate.kind == GateKind::X   ? kPauliX
                            : gate.kind == GateKind::H ? hadamard()
                            : gate.kind == GateKind::Z ? kPauliZ
                                                       : ry(gate.angle);
        terms.push_back(t);
        break;
    }
    case GateKind::CX:
    case GateKind::CZ: {
        // |0><0|_c (x) I + |1><1|_c (x) U_t
        Term off = make();
        off.per_qubit[q[0]] = kProj0;
        Term on = make();
        on.per_qubit[q[0]] = kProj1;
        on.per_qubit[q[1]] = gate.kind == GateKind::CX ? kPauliX : kPauliZ;
        terms.push_back(off);
        terms.push_back(on);
        break;
    }
    case GateKind::CCX: {
        // Sum over the three non-triggering control patterns, plus X on 11.
        for (int pattern = 0; pattern < 4; ++pattern) {
            Term t = make();
            t.per_qubit[q[0]] = (pattern & 1) ? kProj1 : kProj0;
            t.per_qubit[q[1]] = (pattern & 2) ? kProj1 : kProj0;
            if (pattern == 3) {
                t.per_qubit[q[2]] = kPauliX;
            }
            terms.push_back(t);
        }
        break;
    }
    }
    return terms;
}

} // namespace

std::vector<Amplitude> dense_gate_matrix(const Gate &gate,
                                         std::size_t qubit_count) {
    validate_gate(gate, qubit_count);
    const std::size_t dim = std::size_t{1} << qubit_count;
    std::vector<Amplitude> m(dim * dim);
    for (const Term &t : gate_terms(gate, qubit_count)) {
        const auto part = kron_term(t);
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] += part[i];
        }
    }
    return m;
}

StateVector naive_run(const Circuit &circuit) {
    const std::size_t n = circuit.qubit_count();
    if (n > kMaxNaiveQubits) {
        throw std::invalid_argument("naive simulator supports at most 10 qubits, got " +
                                    std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Amplitude> psi(dim);
    if (circuit.init()) {
        psi = *circuit.init();
    } else {
        psi[0] = 1.0;
    }
    for (const Gate &g : circuit.gates()) {
        const auto m = dense_gate_matrix(g, n);
        std::vector<Amplitude> next(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            Amplitude acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                acc += m[r * dim + c] * psi[c];
            }
            next[r] = acc;
        }
        psi = std::move(next);
    }
    return StateVector(n, std::move(psi));
}

double hidden_probability(const EncodedInput &x,
                          std::span<const int, kEncodedSize> w) {
    validate_weights(w, "W1");
    double sum = 0.0;
    for (std::size_t k = 0; k < kEncodedSize; ++k) {
        sum += w[k] * x[k];
    }
    return sum * sum / static_cast<double>(kEncodedSize);
}

double raw_probability(std::span<const double, kHiddenNeurons> hidden,
                       std::span<const int, kHiddenNeurons> w) {
    validate_weights(w, "W2");
    double p = 1.0;
    for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
        p *= w[i] > 0 ? hidden[i] : 1.0 - hidden[i];
    }
    return p;
}

double normalized_probability(double raw, bool flag, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("normalization parameter must lie in [0, 1]");
    }
    return flag ? raw * gamma : 1.0 - (1.0 - raw) * (1.0 - gamma);
}

NetworkProbabilities closed_form_network(const EncodedInput &x,
                                         const QNNModel &model) {
    validate_model(model);
    NetworkProbabilities out;
    for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
        out.hidden[i] = hidden_probability(x, model.w1[i]);
    }
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        out.raw_output[j] = raw_probability(out.hidden, model.w2[j]);
        out.final_output[j] = normalized_probability(
            out.raw_output[j], model.norm_flag[j], model.norm_para[j]);
    }
    return out;
}

std::size_t classify(std::span<const double> probabilities) {
    if (probabilities.empty()) {
        throw std::invalid_argument("cannot classify an empty probability vector");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < probabilities.size(); ++i) {
        if (probabilities[i] > probabilities[best]) {
            best = i;
        }
    }
    return best;
}

} // namespace qnn::oracle
