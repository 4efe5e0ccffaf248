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

#include "qnn/compiler.hpp"

#include "qnn/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qnn {

namespace {

void require_distinct(std::initializer_list<Qubit> qubits, const char *what) {
    for (auto i = qubits.begin(); i != qubits.end(); ++i) {
        for (auto j = qubits.begin(); j != i; ++j) {
            if (*i == *j) {
                throw std::invalid_argument(std::string(what) +
                                            ": qubits must be distinct");
            }
        }
    }
}

void tag(std::vector<Gate> &gates, Stage stage, int neuron) {
    for (Gate &g : gates) {
        g.tag = {stage, static_cast<std::int8_t>(neuron)};
    }
}

void append(std::vector<Gate> &dst, const std::vector<Gate> &src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

} // namespace

RegisterLayout RegisterLayout::standard() noexcept {
    return RegisterLayout{
        .input = {{{0, 1, 2, 3}, {4, 5, 6, 7}}},
        .aux = {8, 9},
        .hidden = {10, 11},
        .raw = {12, 13},
        .norm = {14, 15},
        .final_out = {16, 17},
    };
}

std::size_t RegisterLayout::qubit_count() const noexcept {
    Qubit top = std::max({aux[0], aux[1]});
    for (const auto &reg : input) {
        top = std::max(top, *std::max_element(reg.begin(), reg.end()));
    }
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        top = std::max({top, raw[j], norm[j], final_out[j]});
    }
    for (Qubit h : hidden) {
        top = std::max(top, h);
    }
    return top + 1;
}

NeuronWiring RegisterLayout::hidden_neuron(std::size_t i) const {
    if (i >= kHiddenNeurons) {
        throw std::out_of_range("hidden neuron index out of range");
    }
    return {input[i], hidden[i], aux};
}

OutputWiring RegisterLayout::output_neuron(std::size_t j) const {
    if (j >= kOutputNeurons) {
        throw std::out_of_range("output neuron index out of range");
    }
    return {hidden, raw[j], norm[j], final_out[j]};
}

std::vector<Gate> cccz(Qubit c0, Qubit c1, Qubit c2, Qubit target, Qubit aux0,
                       Qubit aux1) {
    require_distinct({c0, c1, c2, target, aux0, aux1}, "cccz");
    return {
        Gate::ccx(c0, c1, aux0), Gate::ccx(c2, aux0, aux1),
        Gate::cz(aux1, target),  Gate::ccx(c2, aux0, aux1),
        Gate::ccx(c0, c1, aux0),
    };
}

std::vector<Gate> ccccx(std::span<const Qubit, 4> controls, Qubit target,
                        Qubit aux0, Qubit aux1) {
    require_distinct(
        {controls[0], controls[1], controls[2], controls[3], target, aux0, aux1},
        "ccccx");
    return {
        Gate::ccx(controls[0], controls[1], aux0),
        Gate::ccx(controls[2], controls[3], aux1),
        Gate::ccx(aux0, aux1, target),
        Gate::ccx(controls[0], controls[1], aux0),
        Gate::ccx(controls[2], controls[3], aux1),
    };
}

std::size_t sign_flip_cost(std::size_t index) noexcept {
    const auto zeros = kEncodedQubits - static_cast<std::size_t>(std::popcount(
                                            index & (kEncodedSize - 1)));
    return 2 * zeros + 5;
}

std::vector<std::size_t>
effective_sign_set(std::span<const int, kEncodedSize> weights,
                   bool majority_optimization) {
    validate_weights(weights, "w");
    std::vector<std::size_t> neg;
    std::vector<std::size_t> pos;
    std::size_t neg_cost = 0;
    std::size_t pos_cost = 0;
    for (std::size_t i = 0; i < kEncodedSize; ++i) {
        if (weights[i] < 0) {
            neg.push_back(i);
            neg_cost += sign_flip_cost(i);
        } else {
            pos.push_back(i);
            pos_cost += sign_flip_cost(i);
        }
    }
    if (majority_optimization && pos_cost < neg_cost) {
        return pos;
    }
    return neg;
}

std::vector<Gate> compile_sign_stage(std::span<const int, kEncodedSize> weights,
                                     std::span<const Qubit, kEncodedQubits> reg,
                                     std::span<const Qubit, 2> aux,
                                     bool majority_optimization) {
    std::vector<Gate> out;
    for (std::size_t index : effective_sign_set(weights, majority_optimization)) {
        std::vector<Gate> flips;
        for (std::size_t k = 0; k < kEncodedQubits; ++k) {
            if (((index >> k) & 1U) == 0) {
                flips.push_back(Gate::x(reg[k]));
            }
        }
        append(out, flips);
        append(out, cccz(reg[0], reg[1], reg[2], reg[3], aux[0], aux[1]));
        append(out, flips);
    }
    tag(out, Stage::Sign, -1);
    return out;
}

std::vector<Gate>
compile_quadratic_stage(std::span<const Qubit, kEncodedQubits> reg,
                        Qubit hidden, std::span<const Qubit, 2> aux) {
    std::vector<Gate> out;
    for (Qubit q : reg) {
        out.push_back(Gate::h(q));
    }
    for (Qubit q : reg) {
        out.push_back(Gate::x(q));
    }
    append(out, ccccx(reg, hidden, aux[0], aux[1]));
    tag(out, Stage::Quadratic, -1);
    return out;
}

std::vector<Gate> compile_hidden_neuron(const EncodedInput &x,
                                        std::span<const int, kEncodedSize> weights,
                                        const NeuronWiring &wiring, int neuron,
                                        PrepMode prep) {
    std::vector<Gate> out;
    if (prep == PrepMode::Synth) {
        auto gates = synthesize_prep(x, wiring.input, wiring.aux);
        tag(gates, Stage::Prep, neuron);
        append(out, gates);
    }
    auto sign = compile_sign_stage(weights, wiring.input, wiring.aux);
    tag(sign, Stage::Sign, neuron);
    append(out, sign);
    auto quad = compile_quadratic_stage(wiring.input, wiring.hidden, wiring.aux);
    tag(quad, Stage::Quadratic, neuron);
    append(out, quad);
    return out;
}

std::vector<Gate> compile_hidden_neuron(const EncodedInput &x,
                                        std::span<const int, kEncodedSize> weights,
                                        const RegisterLayout &layout,
                                        std::size_t neuron) {
    return compile_hidden_neuron(x, weights, layout.hidden_neuron(neuron),
                                 static_cast<int>(neuron));
}

std::vector<Gate> compile_output_neuron(std::span<const int, kHiddenNeurons> weights,
                                        bool norm_flag, double norm_para,
                                        const OutputWiring &wiring, int neuron) {
    validate_weights(weights, "w2");
    if (!(norm_para >= 0.0 && norm_para <= 1.0)) {
        throw std::invalid_argument("norm_para must lie in [0, 1]");
    }
    const auto &h = wiring.hidden;
    require_distinct({h[0], h[1], wiring.raw, wiring.norm, wiring.final_out},
                     "output neuron");

    std::vector<Gate> product;
    std::vector<Gate> negate;
    for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
        if (weights[i] < 0) {
            negate.push_back(Gate::x(h[i]));
        }
    }
    append(product, negate);
    product.push_back(Gate::ccx(h[0], h[1], wiring.raw));
    append(product, negate);
    tag(product, Stage::Output, neuron);

    std::vector<Gate> norm;
    norm.push_back(Gate::ry(wiring.norm, 2.0 * std::asin(std::sqrt(norm_para))));
    if (norm_flag) {
        norm.push_back(Gate::ccx(wiring.raw, wiring.norm, wiring.final_out));
    } else {
        norm.push_back(Gate::x(wiring.raw));
        norm.push_back(Gate::x(wiring.norm));
        norm.push_back(Gate::ccx(wiring.raw, wiring.norm, wiring.final_out));
        norm.push_back(Gate::x(wiring.final_out));
        norm.push_back(Gate::x(wiring.raw));
        norm.push_back(Gate::x(wiring.norm));
    }
    tag(norm, Stage::Norm, neuron);

    append(product, norm);
    return product;
}

Circuit compile_network(const EncodedInput &x, const QNNModel &model,
                        PrepMode prep) {
    validate_model(model);
    const RegisterLayout layout = RegisterLayout::standard();
    Circuit circuit(layout.qubit_count());

    auto as_vec = [](auto const &arr) {
        return std::vector<Qubit>(arr.begin(), arr.end());
    };
    circuit.add_register("in0", as_vec(layout.input[0]));
    circuit.add_register("in1", as_vec(layout.input[1]));
    circuit.add_register("aux", as_vec(layout.aux));
    circuit.add_register("hidden", as_vec(layout.hidden));
    circuit.add_register("raw", as_vec(layout.raw));
    circuit.add_register("norm", as_vec(layout.norm));
    circuit.add_register("final", as_vec(layout.final_out));
    circuit.set_measured(as_vec(layout.final_out));

    if (prep == PrepMode::Direct) {
        std::array<RegisterLoad, kHiddenNeurons> loads{};
        for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
            loads[i] = {layout.input[i], &x};
        }
        circuit.set_init(direct_init(circuit.qubit_count(), loads));
    }
    for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
        circuit.append(compile_hidden_neuron(x, model.w1[i],
                                             layout.hidden_neuron(i),
                                             static_cast<int>(i), prep));
    }
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        circuit.append(compile_output_neuron(model.w2[j], model.norm_flag[j],
                                             model.norm_para[j],
                                             layout.output_neuron(j),
                                             static_cast<int>(j)));
    }
    return circuit;
}

std::size_t GateCountReport::stage_total(Stage stage) const noexcept {
    std::size_t n = 0;
    for (const StageCount &e : entries) {
        if (e.tag.stage == stage) {
            n += e.count;
        }
    }
    return n;
}

std::size_t GateCountReport::count(Stage stage, int neuron) const noexcept {
    for (const StageCount &e : entries) {
        if (e.tag.stage == stage && e.tag.neuron == neuron) {
            return e.count;
        }
    }
    return 0;
}

GateCountReport gate_count_report(std::span<const Gate> gates) {
    GateCountReport report;
    for (const Gate &g : gates) {
        auto it = std::find_if(report.entries.begin(), report.entries.end(),
                               [&](const StageCount &e) { return e.tag == g.tag; });
        if (it == report.entries.end()) {
            report.entries.push_back({g.tag, 1});
        } else {
            ++it->count;
        }
        ++report.total;
    }
    return report;
}

GateCountReport gate_count_report(const Circuit &circuit) {
    return gate_count_report(std::span<const Gate>(circuit.gates()));
}

} // namespace qnn
