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
#include "qnn/qasm.hpp"

#include "../support/test_support.hpp"

#include <gtest/gtest.h>

namespace qnn {
namespace {

const std::string kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

ParseError parse_failure(std::string_view text) {
    try {
        (void)parse_qasm(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError for: " << text;
    return ParseError("", 0, 0);
}

TEST(ExportQasm, EmptyCircuit) {
    EXPECT_EQ(export_qasm(Circuit(2)), kHeader + "qreg q[2];\n");
}

TEST(ExportQasm, SingleHadamard) {
    Circuit c(1);
    c.append(Gate::h(0));
    EXPECT_EQ(export_qasm(c), kHeader + "qreg q[1];\nh q[0];\n");
}

TEST(ExportQasm, MeasuredAndRegisters) {
    Circuit c(3);
    c.add_register("pair", {0, 2});
    c.append(Gate::ry(1, 0.5));
    c.append(Gate::ccx(0, 1, 2));
    c.set_measured({2});
    EXPECT_EQ(export_qasm(c), kHeader +
                                  "qreg q[3];\ncreg c[1];\n// register pair: 0 2\n"
                                  "ry(0.5) q[1];\nccx q[0],q[1],q[2];\n"
                                  "measure q[2] -> c[0];\n");
}

TEST(ExportQasm, RejectsDirectInit) {
    Circuit c(1);
    c.set_init({0.0, 1.0});
    EXPECT_THROW((void)export_qasm(c), std::invalid_argument);
}

TEST(ParseQasm, RoundTripRandomCircuits) {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c(1 + rng.below(8));
        for (std::size_t g = rng.below(40); g > 0; --g) {
            c.append(testing::random_gate(rng, c.qubit_count()));
        }
        const auto text = export_qasm(c);
        const auto back = parse_qasm(text);
        EXPECT_EQ(back, c);
        EXPECT_EQ(export_qasm(back), text);
        EXPECT_LT(max_abs_diff(run(back), run(c)), 1e-12);
    }
}

TEST(ParseQasm, RoundTripNetworkKeepsAnnotations) {
    SplitMix64 rng(62);
    const auto c = compile_network(testing::random_input(rng), testing::random_model(rng));
    const auto back = parse_qasm(export_qasm(c));
    EXPECT_EQ(back, c);
    EXPECT_EQ(back.registers().size(), c.registers().size());
    EXPECT_EQ(gate_count_report(back).total, gate_count_report(c).total);
}

TEST(ParseQasm, Errors) {
    const auto empty = parse_failure("");
    EXPECT_NE(std::string(empty.what()).find("missing version header"), std::string::npos);
    EXPECT_EQ(empty.line(), 1U);

    const auto unknown = parse_failure(kHeader + "qreg q[2];\nfoo q[0];\n");
    EXPECT_NE(std::string(unknown.what()).find("unknown gate 'foo'"), std::string::npos);
    EXPECT_EQ(unknown.line(), 4U);
    EXPECT_EQ(unknown.column(), 1U);

    const auto range = parse_failure(kHeader + "qreg q[2];\nx q[2];\n");
    EXPECT_EQ(range.line(), 4U);

    (void)parse_failure(kHeader + "qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\nx q[0];\n");
    (void)parse_failure(kHeader + "qreg q[2];\ncx q[1],q[1];\n");
    (void)parse_failure(kHeader + "qreg q[1];\nry(nan) q[0];\n");
}

} // namespace
} // namespace qnn
