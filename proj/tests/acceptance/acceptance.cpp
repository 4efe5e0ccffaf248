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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "qnn/compiler.hpp"
#include "qnn/error.hpp"
#include "qnn/ingest.hpp"
#include "qnn/model_io.hpp"
#include "qnn/oracle.hpp"
#include "qnn/pipeline.hpp"
#include "qnn/qasm.hpp"
#include "qnn/trainer.hpp"

#include "../support/test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

namespace {

using namespace qnn;

const std::filesystem::path kData = QNN_DATA_DIR;
const std::filesystem::path kModel = QNN_MODEL_PATH;

constexpr std::array<Qubit, 4> kReg{0, 1, 2, 3};
constexpr std::array<Qubit, 2> kAux{5, 6};
const NeuronWiring kWiring{kReg, 4, kAux};

struct Outcome {
    bool pass = false;
    std::string detail;
};

Circuit circuit_of(std::size_t n, std::span<const Gate> gates) {
    Circuit c(n);
    for (const Gate &g : gates) {
        c.append(g);
    }
    return c;
}

Outcome hidden_neuron_law() {
    const auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = testing::random_input(rng);
        const auto w = testing::random_weights(rng);
        const auto s = run(circuit_of(7, compile_hidden_neuron(x, w, kWiring, 0)));
        worst = std::max(worst, std::abs(marginal_prob_one(s, 4) -
                                         oracle::hidden_probability(x, w)));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "200 trials, max error " << worst << ", " << secs << " s";
    return {worst <= 1e-10 && secs < 30.0, os.str()};
}

Outcome cross_simulator() {
    SplitMix64 rng(1002);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = testing::random_circuit(rng, 10, 60);
        worst = std::max(worst, max_abs_diff(run(c), oracle::naive_run(c)));
    }
    std::ostringstream os;
    os << "200 circuits, max amplitude difference " << worst;
    return {worst <= 1e-12, os.str()};
}

Outcome state_prep() {
    SplitMix64 rng(1003);
    double worst_fidelity = 1.0;
    double worst_aux = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto v = testing::random_input(rng);
        const auto synth = run(circuit_of(7, synthesize_prep(v, kReg, kAux)));
        const RegisterLoad load{kReg, &v};
        Circuit direct(7);
        direct.set_init(direct_init(7, std::span(&load, 1)));
        const auto ref = run(direct);
        Amplitude overlap = 0.0;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            overlap += std::conj(ref[i]) * synth[i];
        }
        worst_fidelity = std::min(worst_fidelity, std::norm(overlap));
        for (Qubit q : kAux) {
            worst_aux = std::max(worst_aux, marginal_prob_one(synth, q));
        }
    }
    std::ostringstream os;
    os << "100 vectors, min fidelity " << worst_fidelity << ", max aux population "
       << worst_aux;
    return {worst_fidelity >= 1.0 - 1e-9 && worst_aux < 1e-12, os.str()};
}

Outcome end_to_end() {
    SplitMix64 rng(1004);
    const auto layout = RegisterLayout::standard();
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = testing::random_input(rng);
        const auto m = testing::random_model(rng);
        const auto s = run(compile_network(x, m));
        const auto expect = oracle::closed_form_network(x, m);
        for (std::size_t j = 0; j < kOutputNeurons; ++j) {
            worst = std::max(worst, std::abs(marginal_prob_one(s, layout.final_out[j]) -
                                             expect.final_output[j]));
        }
    }
    std::ostringstream os;
    os << "50 instances, max error " << worst;
    return {worst <= 1e-9, os.str()};
}

Outcome sign_symmetry() {
    SplitMix64 rng(1005);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = testing::random_input(rng);
        auto w = testing::random_weights(rng);
        const auto a = marginals(run(circuit_of(7, compile_hidden_neuron(x, w, kWiring, 0))));
        for (int &v : w) {
            v = -v;
        }
        const auto b = marginals(run(circuit_of(7, compile_hidden_neuron(x, w, kWiring, 0))));
        for (Qubit q = 0; q <= 4; ++q) {
            worst = std::max(worst, std::abs(a[q] - b[q]));
        }
    }
    // Every one of the 2^16 weight vectors.
    std::size_t max_sign = 0;
    bool never_worse = true;
    for (std::uint32_t bits = 0; bits < (1U << kEncodedSize); ++bits) {
        std::array<int, kEncodedSize> w{};
        for (std::size_t k = 0; k < kEncodedSize; ++k) {
            w[k] = (bits >> k) & 1U ? -1 : 1;
        }
        const auto opt = gate_count_report(compile_sign_stage(w, kReg, kAux, true))
                             .stage_total(Stage::Sign);
        const auto plain = gate_count_report(compile_sign_stage(w, kReg, kAux, false))
                               .stage_total(Stage::Sign);
        never_worse = never_worse && opt <= plain;
        max_sign = std::max(max_sign, opt);
    }
    std::ostringstream os;
    os << "w vs -w max marginal difference " << worst << "; all 65536 weight vectors: "
       << "optimized never larger " << (never_worse ? "yes" : "no")
       << ", max sign-stage gates " << max_sign;
    return {worst <= 1e-12 && never_worse && max_sign <= 104, os.str()};
}

Outcome sampling() {
    SplitMix64 rng(1006);
    constexpr std::uint64_t kShots = 8192;
    double worst_ratio = 0.0;
    for (std::uint64_t run_seed = 0; run_seed < 20; ++run_seed) {
        const auto x = testing::random_input(rng);
        const auto m = testing::random_model(rng);
        Circuit c = compile_network(x, m, PrepMode::Direct);
        const auto s = run(c);
        const auto freq = analyze(sample_counts(s, kShots, run_seed), s.qubit_count());
        for (Qubit q = 0; q < s.qubit_count(); ++q) {
            const double p = marginal_prob_one(s, q);
            const double sigma = std::sqrt(p * (1 - p) / kShots);
            const double dev = std::abs(freq[q] - p);
            if (sigma == 0.0) {
                worst_ratio = std::max(worst_ratio, dev > 1e-12 ? INFINITY : 0.0);
            } else {
                worst_ratio = std::max(worst_ratio, dev / sigma);
            }
        }
    }
    std::ostringstream os;
    os << "20 seeds x 18 qubits, max deviation " << worst_ratio << " sigma";
    return {worst_ratio <= 5.0, os.str()};
}

Outcome qasm_round_trip() {
    SplitMix64 rng(1007);
    double worst = 0.0;
    bool stable = true;
    bool equal = true;
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = testing::random_input(rng);
        const auto m = testing::random_model(rng);
        const auto c = compile_network(x, m);
        const auto text = export_qasm(c);
        stable = stable && export_qasm(compile_network(x, m)) == text;
        const auto back = parse_qasm(text);
        equal = equal && back == c;
        stable = stable && export_qasm(back) == text;
        worst = std::max(worst, max_abs_diff(run(back), run(c)));
    }
    std::ostringstream os;
    os << "100 networks, max amplitude difference " << worst << ", gate lists equal "
       << (equal ? "yes" : "no") << ", bytes stable " << (stable ? "yes" : "no");
    return {worst <= 1e-12 && equal && stable, os.str()};
}

bool throws_parse_error(const std::function<void()> &fn, std::string_view needle) {
    try {
        fn();
    } catch (const ParseError &e) {
        return std::string_view(e.what()).find(needle) != std::string_view::npos;
    }
    return false;
}

Outcome idx_round_trip() {
    bool ok = true;
    std::size_t files = 0;
    for (const char *split : {"train", "test"}) {
        const auto img_path = kData / (std::string("mnist5k-") + split + "-images-idx3-ubyte.gz");
        const auto lab_path = kData / (std::string("mnist5k-") + split + "-labels-idx1-ubyte.gz");
        const auto img_bytes = read_file_bytes(img_path);
        const auto lab_bytes = read_file_bytes(lab_path);
        ok = ok && serialize_idx_images(parse_idx_images(img_bytes)) == img_bytes;
        ok = ok && serialize_idx_labels(parse_idx_labels(lab_bytes)) == lab_bytes;
        files += 2;
    }
    Bytes label_magic{0, 0, 8, 1, 0, 0, 0, 0, 0, 0, 0, 28, 0, 0, 0, 28};
    Bytes short_images{0, 0, 8, 3, 0, 0, 0, 1, 0, 0, 0, 28, 0, 0, 0, 28, 7};
    Bytes image_magic{0, 0, 8, 3, 0, 0, 0, 0};
    Bytes bad_label{0, 0, 8, 1, 0, 0, 0, 1, 10};
    const bool errors =
        throws_parse_error([&] { (void)parse_idx_images(label_magic); }, "label magic in image file") &&
        throws_parse_error([&] { (void)parse_idx_images(short_images); }, "truncated") &&
        throws_parse_error([&] { (void)parse_idx_labels(image_magic); }, "image magic in label file") &&
        throws_parse_error([&] { (void)parse_idx_labels(bad_label); }, "expected 0-9");
    std::ostringstream os;
    os << files << " data files byte-identical " << (ok ? "yes" : "no")
       << ", malformed inputs rejected " << (errors ? "yes" : "no");
    return {ok && errors, os.str()};
}

Outcome pipeline() {
    const auto model = read_model(kModel);
    auto set = filter_and_encode(load_dataset(kData / "mnist5k-test-images-idx3-ubyte.gz",
                                              kData / "mnist5k-test-labels-idx1-ubyte.gz"),
                                 ClassPair{3, 6});
    if (set.items.size() < 100) {
        return {false, "fewer than 100 test images"};
    }
    set.items.erase(set.items.begin() + 100, set.items.end());
    InferenceOptions exact;
    InferenceOptions shots;
    shots.shots = 8192;
    shots.seed = 7;
    const auto exact_res = infer_batch(set.items, model, exact);
    const auto shot_res = infer_batch(set.items, model, shots);
    std::size_t shot_agree = 0;
    std::size_t oracle_agree = 0;
    for (std::size_t i = 0; i < set.items.size(); ++i) {
        shot_agree += shot_res[i].predicted == exact_res[i].predicted;
        const auto p = oracle::closed_form_network(set.items[i].input, model);
        oracle_agree += oracle::classify(p.final_output) == exact_res[i].predicted;
    }
    std::ostringstream os;
    os << "shots vs exact " << shot_agree << "/100, exact vs closed form " << oracle_agree
       << "/100";
    return {shot_agree >= 95 && oracle_agree == 100, os.str()};
}

Outcome trainer() {
    SplitMix64 rng(1010);
    const auto train = testing::synthetic_set(rng, 100);
    TrainOptions opts;
    opts.seed = 5;
    opts.max_iters = 500;
    opts.restarts = 4;
    opts.threads = 0;
    const auto a = local_search(train, opts);
    const auto b = local_search(train, opts);
    const double acc = train_accuracy(a.model, train);
    bool monotone = true;
    for (std::size_t i = 1; i < a.trace.size(); ++i) {
        monotone = monotone && a.trace[i] >= a.trace[i - 1];
    }
    const bool same = model_to_json(a.model) == model_to_json(b.model) && a.trace == b.trace;
    std::ostringstream os;
    os << "accuracy " << acc << " after " << a.trace.size() - 1 << " iterations, trace "
       << (monotone ? "non-decreasing" : "decreasing") << ", reproducible "
       << (same ? "yes" : "no");
    return {acc == 1.0 && a.trace.size() <= 501 && monotone && same, os.str()};
}

} // namespace

int main() {
    const std::array<std::pair<const char *, Outcome (*)()>, 10> criteria{{
        {"hidden-neuron law", hidden_neuron_law},
        {"cross-simulator equivalence", cross_simulator},
        {"state-prep synthesis", state_prep},
        {"end-to-end oracle equivalence", end_to_end},
        {"sign symmetry and majority optimization", sign_symmetry},
        {"sampling soundness", sampling},
        {"QASM round-trip", qasm_round_trip},
        {"IDX round-trip", idx_round_trip},
        {"pipeline consistency", pipeline},
        {"trainer sanity", trainer},
    }};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failed += out.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
