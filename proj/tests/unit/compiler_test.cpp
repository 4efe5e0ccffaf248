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
#include "qnn/oracle.hpp"

#include "../support/test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qnn {
namespace {

constexpr std::array<Qubit, 4> kReg{0, 1, 2, 3};
constexpr std::array<Qubit, 2> kAux{4, 5};
const NeuronWiring kWiring{{0, 1, 2, 3}, 4, {5, 6}};

Circuit circuit_of(std::size_t n, std::span<const Gate> gates) {
    Circuit c(n);
    for (const Gate &g : gates) {
        c.append(g);
    }
    return c;
}

Gate sign_x(Qubit q) {
    Gate g = Gate::x(q);
    g.tag = {Stage::Sign};
    return g;
}

std::array<int, kEncodedSize> all_plus() {
    std::array<int, kEncodedSize> w{};
    w.fill(1);
    return w;
}

// Uniform superposition on the register, then `gates`.
StateVector uniform_then(std::span<const Gate> gates) {
    Circuit c(6);
    for (Qubit q : kReg) {
        c.append(Gate::h(q));
    }
    for (const Gate &g : gates) {
        c.append(g);
    }
    return oracle::naive_run(c);
}

TEST(Cccz, PhaseOnAllOnesOnly) {
    const auto gates = cccz(0, 1, 2, 3, 4, 5);
    EXPECT_EQ(gates.size(), 5U);
    const auto s = uniform_then(gates);
    for (std::size_t i = 0; i < kEncodedSize; ++i) {
        EXPECT_NEAR(s[i].real(), i == 15 ? -0.25 : 0.25, 1e-15) << i;
    }
    for (std::size_t i = kEncodedSize; i < s.size(); ++i) {
        EXPECT_EQ(s[i], Amplitude(0.0));
    }
}

TEST(Ccccx, TruthTable) {
    const auto gates = ccccx(kReg, 6, 4, 5);
    EXPECT_EQ(gates.size(), 5U);
    for (std::size_t i = 0; i < kEncodedSize; ++i) {
        Circuit c(7);
        for (Qubit q : kReg) {
            if ((i >> q) & 1U) {
                c.append(Gate::x(q));
            }
        }
        for (const Gate &g : gates) {
            c.append(g);
        }
        const auto s = run(c);
        const std::size_t expect = i == 15 ? i | (1U << 6) : i;
        EXPECT_EQ(s[expect], Amplitude(1.0)) << i;
    }
}

TEST(SignStage, AllPlusIsEmpty) {
    EXPECT_TRUE(compile_sign_stage(all_plus(), kReg, kAux).empty());
}

TEST(SignStage, SingleMinusAtIndexThree) {
    auto w = all_plus();
    w[3] = -1;
    const auto gates = compile_sign_stage(w, kReg, kAux);
    ASSERT_EQ(gates.size(), 9U);
    EXPECT_EQ(gates[0], sign_x(2));
    EXPECT_EQ(gates[1], sign_x(3));
    EXPECT_EQ(gates[7], sign_x(2));
    EXPECT_EQ(gates[8], sign_x(3));
    const auto s = uniform_then(gates);
    for (std::size_t i = 0; i < kEncodedSize; ++i) {
        EXPECT_NEAR(s[i].real(), i == 3 ? -0.25 : 0.25, 1e-15);
    }
}

TEST(SignStage, SingleMinusAtFifteenIsOneCccz) {
    auto w = all_plus();
    w[15] = -1;
    EXPECT_EQ(compile_sign_stage(w, kReg, kAux).size(), 5U);
}

TEST(SignStage, TwelveMinusUsesComplement) {
    std::array<int, kEncodedSize> w{};
    w.fill(-1);
    for (std::size_t i = 12; i < 16; ++i) {
        w[i] = 1;
    }
    EXPECT_EQ(effective_sign_set(w), (std::vector<std::size_t>{12, 13, 14, 15}));
    EXPECT_EQ(effective_sign_set(w, false).size(), 12U);
}

TEST(SignStage, KeepsLargerSetWhenComplementCostsMore) {
    auto w = all_plus();
    for (std::size_t i : {15, 14, 13, 11, 7, 12, 10, 9, 6}) {
        w[i] = -1;
    }
    const auto set = effective_sign_set(w);
    EXPECT_EQ(set.size(), 9U);
    EXPECT_EQ(compile_sign_stage(w, kReg, kAux).size(), 69U);
    EXPECT_EQ(compile_sign_stage(w, kReg, kAux, false).size(), 69U);
}

TEST(SignStage, CostBoundsOverRandomWeights) {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const auto w = testing::random_weights(rng);
        const auto opt = compile_sign_stage(w, kReg, kAux).size();
        const auto plain = compile_sign_stage(w, kReg, kAux, false).size();
        EXPECT_LE(opt, plain);
        EXPECT_LE(opt, 72U);
    }
}

TEST(SignStage, ComplementOnlyChangesGlobalSign) {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w = testing::random_weights(rng);
        const auto a = uniform_then(compile_sign_stage(w, kReg, kAux));
        const auto b = uniform_then(compile_sign_stage(w, kReg, kAux, false));
        const double phase = a[0].real() * b[0].real() > 0 ? 1.0 : -1.0;
        for (std::size_t i = 0; i < kEncodedSize; ++i) {
            EXPECT_NEAR(a[i].real(), phase * b[i].real(), 1e-14);
            EXPECT_NEAR(b[i].real(), w[i] * 0.25, 1e-14);
        }
    }
}

TEST(QuadraticStage, Examples) {
    const std::array<std::pair<std::array<int, kEncodedSize>, double>, 2> cases{{
        {all_plus(), 1.0},
        {{1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1}, 0.0},
    }};
    for (const auto &[w, expect] : cases) {
        std::array<double, kEncodedSize> v{};
        v.fill(0.25);
        const auto x = EncodedInput::from_values(v);
        const auto gates = compile_hidden_neuron(x, w, kWiring, 0);
        EXPECT_NEAR(marginal_prob_one(oracle::naive_run(circuit_of(7, gates)), 4), expect,
                    1e-12);
    }
    std::array<double, kEncodedSize> e0{};
    e0[0] = 1.0;
    const auto gates = compile_hidden_neuron(EncodedInput::from_values(e0), all_plus(), kWiring, 0);
    EXPECT_NEAR(marginal_prob_one(oracle::naive_run(circuit_of(7, gates)), 4), 1.0 / 16, 1e-12);
}

TEST(HiddenNeuron, MatchesClosedFormAndCleansAux) {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = testing::random_input(rng);
        const auto w = testing::random_weights(rng);
        const auto s = oracle::naive_run(circuit_of(7, compile_hidden_neuron(x, w, kWiring, 1)));
        EXPECT_NEAR(marginal_prob_one(s, 4), oracle::hidden_probability(x, w), 1e-10);
        EXPECT_LT(marginal_prob_one(s, 5) + marginal_prob_one(s, 6), 1e-12);
    }
}

TEST(HiddenNeuron, NegatedWeightsGiveSameProbability) {
    SplitMix64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = testing::random_input(rng);
        auto w = testing::random_weights(rng);
        const auto a = run(circuit_of(7, compile_hidden_neuron(x, w, kWiring, 0)));
        for (int &v : w) {
            v = -v;
        }
        const auto b = run(circuit_of(7, compile_hidden_neuron(x, w, kWiring, 0)));
        EXPECT_LE(std::abs(marginal_prob_one(a, 4) - marginal_prob_one(b, 4)), 1e-12);
    }
}

TEST(HiddenNeuron, DirectPrepSkipsPrepGates) {
    SplitMix64 rng(35);
    const auto x = testing::random_input(rng);
    const auto w = testing::random_weights(rng);
    for (const Gate &g : compile_hidden_neuron(x, w, kWiring, 0, PrepMode::Direct)) {
        EXPECT_NE(g.tag.stage, Stage::Prep);
    }
}

double output_final(std::array<double, 2> h, std::array<int, 2> w, bool flag, double gamma) {
    const OutputWiring wiring{{0, 1}, 2, 3, 4};
    Circuit c(5);
    for (Qubit q = 0; q < 2; ++q) {
        c.append(Gate::ry(q, 2.0 * std::asin(std::sqrt(h[q]))));
    }
    for (const Gate &g : compile_output_neuron(w, flag, gamma, wiring, 0)) {
        c.append(g);
    }
    return marginal_prob_one(oracle::naive_run(c), 4);
}

TEST(OutputNeuron, Examples) {
    EXPECT_NEAR(output_final({1.0, 1.0}, {1, 1}, true, 1.0), 1.0, 1e-12);
    EXPECT_NEAR(output_final({1.0, 1.0}, {1, -1}, true, 1.0), 0.0, 1e-12);
    EXPECT_NEAR(output_final({0.5, 0.5}, {1, 1}, true, 0.5), 0.125, 1e-12);
    EXPECT_NEAR(output_final({0.2, 0.3}, {1, -1}, false, 0.5), 1 - 0.86 * 0.5, 1e-12);
}

TEST(OutputNeuron, ProductStatesMatchClosedForm) {
    SplitMix64 rng(36);
    for (int trial = 0; trial < 100; ++trial) {
        const std::array<double, 2> h{rng.uniform(), rng.uniform()};
        const std::array<int, 2> w{rng.next() & 1U ? 1 : -1, rng.next() & 1U ? 1 : -1};
        const bool flag = (rng.next() & 1U) != 0;
        const double gamma = rng.uniform();
        const double expect = oracle::normalized_probability(oracle::raw_probability(h, w), flag, gamma);
        EXPECT_NEAR(output_final(h, w, flag, gamma), expect, 1e-12);
    }
}

TEST(OutputNeuron, RejectsGammaOutsideUnitInterval) {
    const OutputWiring wiring{{0, 1}, 2, 3, 4};
    EXPECT_THROW((void)compile_output_neuron(std::array<int, 2>{1, 1}, true, 1.5, wiring, 0),
                 std::invalid_argument);
}

TEST(CompileNetwork, LayoutAndRegisters) {
    SplitMix64 rng(37);
    const auto c = compile_network(testing::random_input(rng), testing::random_model(rng));
    EXPECT_EQ(c.qubit_count(), 18U);
    EXPECT_FALSE(c.init().has_value());
    EXPECT_EQ(c.measured(), (std::vector<Qubit>{16, 17}));
    ASSERT_NE(c.find_register("hidden"), nullptr);
    EXPECT_EQ(c.find_register("hidden")->qubits, (std::vector<Qubit>{10, 11}));
    EXPECT_EQ(c.find_register("in1")->qubits, (std::vector<Qubit>{4, 5, 6, 7}));
    EXPECT_EQ(RegisterLayout::standard().qubit_count(), 18U);
}

TEST(CompileNetwork, MatchesClosedFormBothPrepModes) {
    SplitMix64 rng(38);
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = testing::random_input(rng);
        const auto m = testing::random_model(rng);
        const auto expect = oracle::closed_form_network(x, m);
        for (PrepMode mode : {PrepMode::Direct, PrepMode::Synth}) {
            const auto s = run(compile_network(x, m, mode));
            for (std::size_t j = 0; j < 2; ++j) {
                EXPECT_NEAR(marginal_prob_one(s, 16 + j), expect.final_output[j], 1e-9);
                EXPECT_NEAR(marginal_prob_one(s, 12 + j), expect.raw_output[j], 1e-9);
                EXPECT_NEAR(marginal_prob_one(s, 10 + j), expect.hidden[j], 1e-9);
            }
            EXPECT_LT(marginal_prob_one(s, 8) + marginal_prob_one(s, 9), 1e-12);
        }
    }
}

TEST(GateCountReport, PerStageAndNeuron) {
    std::array<double, kEncodedSize> v{};
    v[0] = 1.0;
    QNNModel m;
    for (auto &row : m.w1) {
        row.fill(1);
    }
    m.w1[1][15] = -1;
    m.w2 = {{{1, 1}, {1, 1}}};
    m.norm_flag = {true, true};
    m.norm_para = {1.0, 1.0};
    const auto report = gate_count_report(compile_network(EncodedInput::from_values(v), m));
    EXPECT_EQ(report.count(Stage::Sign, 0), 0U);
    EXPECT_EQ(report.count(Stage::Sign, 1), 5U);
    EXPECT_EQ(report.count(Stage::Prep, 0), 0U);
    EXPECT_EQ(report.count(Stage::Quadratic, 0), 13U);
    EXPECT_EQ(report.stage_total(Stage::Quadratic), 26U);
    std::size_t sum = 0;
    for (const auto &e : report.entries) {
        sum += e.count;
    }
    EXPECT_EQ(sum, report.total);
}

} // namespace
} // namespace qnn
