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

// qnnc: compile, simulate and classify with binary-weight quantum networks.
//
// Exit codes: 0 success, 1 usage, 2 I/O failure, 3 parse failure,
// 4 validation failure.

#include "qnn/compiler.hpp"
#include "qnn/error.hpp"
#include "qnn/ingest.hpp"
#include "qnn/model_io.hpp"
#include "qnn/oracle.hpp"
#include "qnn/pipeline.hpp"
#include "qnn/qasm.hpp"
#include "qnn/state_vector.hpp"
#include "qnn/trainer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kParse = 3, kValidation = 4 };

struct DataArgs {
    std::string images;
    std::string labels;
    std::string classes = "3,6";
    std::size_t limit = 0;
};

struct Options {
    DataArgs data;
    std::string model;
    std::string out;
    std::string input;
    std::string prep;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t index = 0;
    std::size_t iters = 500;
    std::size_t restarts = 4;
    std::size_t threads = 0;
};

void add_data_flags(CLI::App *cmd, DataArgs &d) {
    cmd->add_option("--images", d.images, "IDX image file (.gz accepted)")->required();
    cmd->add_option("--labels", d.labels, "IDX label file (.gz accepted)")->required();
    cmd->add_option("--classes", d.classes, "digit pair a,b (a -> class 0)");
    cmd->add_option("--limit", d.limit, "use only the first N filtered images (0 = all)");
}

qnn::ClassPair parse_classes(const std::string &text) {
    const auto comma = text.find(',');
    auto digit = [&](const std::string &s) -> std::uint8_t {
        if (s.size() != 1 || s[0] < '0' || s[0] > '9') {
            throw qnn::ValidationError("--classes: expected two digits a,b, got '" + text + "'");
        }
        return static_cast<std::uint8_t>(s[0] - '0');
    };
    if (comma == std::string::npos) {
        throw qnn::ValidationError("--classes: expected two digits a,b, got '" + text + "'");
    }
    const qnn::ClassPair pair{digit(text.substr(0, comma)), digit(text.substr(comma + 1))};
    if (pair.first == pair.second) {
        throw qnn::ValidationError("--classes: digits must differ");
    }
    return pair;
}

std::vector<qnn::LabeledInput> load_items(const DataArgs &d) {
    const auto pair = parse_classes(d.classes);
    const qnn::Dataset ds = qnn::load_dataset(d.images, d.labels);
    qnn::FilteredSet set = qnn::filter_and_encode(ds, pair);
    if (set.dropped != 0) {
        std::cerr << "qnnc: dropped " << set.dropped << " all-zero image(s)\n";
    }
    if (d.limit != 0 && set.items.size() > d.limit) {
        set.items.erase(set.items.begin() + static_cast<std::ptrdiff_t>(d.limit),
                        set.items.end());
    }
    return std::move(set.items);
}

qnn::PrepMode parse_prep(const std::string &s) {
    if (s == "direct") {
        return qnn::PrepMode::Direct;
    }
    if (s == "synth") {
        return qnn::PrepMode::Synth;
    }
    throw qnn::ValidationError("--prep: expected direct or synth, got '" + s + "'");
}

// Writes to --out when given, otherwise stdout.
class Output {
  public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw qnn::IoError("cannot write " + path);
            }
        }
    }
    std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) {
            throw qnn::IoError("write failed");
        }
    }

  private:
    std::ofstream file_;
};

const qnn::LabeledInput &select_item(const std::vector<qnn::LabeledInput> &items,
                                     std::size_t index) {
    if (index >= items.size()) {
        throw qnn::ValidationError("--index " + std::to_string(index) + " out of range (" +
                                   std::to_string(items.size()) + " filtered images)");
    }
    return items[index];
}

ordered_json stage_counts(const qnn::Circuit &circuit) {
    const auto report = qnn::gate_count_report(circuit);
    ordered_json stages = ordered_json::array();
    for (const auto &e : report.entries) {
        stages.push_back({{"stage", std::string(qnn::stage_name(e.tag.stage))},
                          {"neuron", e.tag.neuron},
                          {"gates", e.count}});
    }
    return {{"qubits", circuit.qubit_count()},
            {"gates", report.total},
            {"direct_init", circuit.init().has_value()},
            {"stages", stages}};
}

int cmd_encode(const Options &o) {
    const auto items = load_items(o.data);
    Output out(o.out);
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto v = items[k].input.values();
        out.stream() << ordered_json{{"index", k},
                                     {"source", items[k].source_index},
                                     {"label", items[k].label},
                                     {"values", std::vector<double>(v.begin(), v.end())}}
                            .dump()
                     << '\n';
    }
    out.finish();
    return kOk;
}

int cmd_compile(const Options &o) {
    const auto model = qnn::read_model(o.model);
    const auto items = load_items(o.data);
    const auto circuit =
        qnn::compile_network(select_item(items, o.index).input, model,
                             parse_prep(o.prep.empty() ? "synth" : o.prep));
    Output out(o.out);
    out.stream() << stage_counts(circuit).dump() << '\n';
    out.finish();
    return kOk;
}

int cmd_export_qasm(const Options &o) {
    const auto model = qnn::read_model(o.model);
    const auto items = load_items(o.data);
    const auto circuit =
        qnn::compile_network(select_item(items, o.index).input, model,
                             parse_prep(o.prep.empty() ? "synth" : o.prep));
    const std::string text = qnn::export_qasm(circuit);
    Output out(o.out);
    out.stream() << text;
    out.finish();
    return kOk;
}

int cmd_parse_qasm(const Options &o) {
    const qnn::Bytes bytes = qnn::read_file_bytes(o.input);
    const qnn::Circuit circuit =
        qnn::parse_qasm(std::string_view(reinterpret_cast<const char *>(bytes.data()), bytes.size()));
    const qnn::StateVector state = qnn::run(circuit);
    ordered_json report = stage_counts(circuit);
    ordered_json marginals = ordered_json::array();
    for (qnn::Qubit q : circuit.measured()) {
        marginals.push_back(qnn::marginal_prob_one(state, q));
    }
    report["measured"] = circuit.measured();
    report["probabilities"] = marginals;
    if (o.shots != 0) {
        report["counts"] = qnn::project_counts(qnn::sample_counts(state, o.shots, o.seed),
                                               circuit.measured());
    }
    if (!marginals.empty()) {
        report["predicted"] = qnn::oracle::classify(marginals.get<std::vector<double>>());
    }
    Output out(o.out);
    out.stream() << report.dump() << '\n';
    out.finish();
    return kOk;
}

int cmd_run(const Options &o) {
    const auto model = qnn::read_model(o.model);
    const auto items = load_items(o.data);
    qnn::InferenceOptions inf;
    inf.shots = o.shots;
    inf.seed = o.seed;
    inf.prep = parse_prep(o.prep.empty() ? "direct" : o.prep);
    const auto results = qnn::infer_batch(items, model, inf, o.threads);

    Output out(o.out);
    std::size_t correct = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto &r = results[k];
        ordered_json row{{"index", k},
                         {"source", items[k].source_index},
                         {"label", items[k].label},
                         {"predicted", r.predicted},
                         {"probabilities", r.probabilities}};
        if (r.counts) {
            row["counts"] = *r.counts;
        }
        out.stream() << row.dump() << '\n';
        correct += r.predicted == items[k].label ? 1 : 0;
    }
    const double accuracy =
        items.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(items.size());
    out.stream() << ordered_json{{"summary",
                                  {{"images", items.size()},
                                   {"correct", correct},
                                   {"accuracy", accuracy},
                                   {"shots", o.shots},
                                   {"seed", o.seed}}}}
                        .dump()
                 << '\n';
    out.finish();
    return kOk;
}

int cmd_train(const Options &o) {
    const auto items = load_items(o.data);
    qnn::TrainOptions t;
    t.seed = o.seed;
    t.max_iters = o.iters;
    t.restarts = o.restarts;
    t.threads = o.threads;
    const auto result = qnn::local_search(items, t);
    if (!o.out.empty()) {
        qnn::write_model(o.out, result.model);
    } else {
        std::cout << qnn::model_to_json(result.model);
    }
    std::cerr << ordered_json{{"images", items.size()},
                              {"restart", result.restart},
                              {"train_accuracy", result.trace.back()}}
                     .dump()
              << '\n';
    return kOk;
}

int cmd_eval(const Options &o) {
    const auto model = qnn::read_model(o.model);
    const auto items = load_items(o.data);
    Output out(o.out);
    out.stream() << ordered_json{{"images", items.size()},
                                 {"accuracy", items.empty() ? 0.0
                                                            : qnn::train_accuracy(model, items)}}
                        .dump()
                 << '\n';
    out.finish();
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Binary-weight quantum neural network compiler and simulator"};
    app.require_subcommand(1);
    Options o;

    auto *encode = app.add_subcommand("encode", "pool and normalize images to 16 amplitudes");
    add_data_flags(encode, o.data);
    encode->add_option("--out", o.out, "output path (default stdout)");

    auto *compile = app.add_subcommand("compile", "compile one image and report gate counts");
    auto *export_cmd = app.add_subcommand("export-qasm", "compile one image to OpenQASM 2.0");
    for (auto *cmd : {compile, export_cmd}) {
        cmd->add_option("--model", o.model, "model JSON")->required();
        add_data_flags(cmd, o.data);
        cmd->add_option("--index", o.index, "filtered image index");
        cmd->add_option("--prep", o.prep, "state preparation: direct or synth (default synth)");
        cmd->add_option("--out", o.out, "output path (default stdout)");
    }

    auto *parse_cmd = app.add_subcommand("parse-qasm", "parse, simulate and measure a QASM file");
    parse_cmd->add_option("input", o.input, "QASM file")->required();
    parse_cmd->add_option("--shots", o.shots, "samples (0 = exact marginals)");
    parse_cmd->add_option("--seed", o.seed, "sampling seed");
    parse_cmd->add_option("--out", o.out, "output path (default stdout)");

    auto *run_cmd = app.add_subcommand("run", "classify images through the simulated circuit");
    run_cmd->add_option("--model", o.model, "model JSON")->required();
    add_data_flags(run_cmd, o.data);
    run_cmd->add_option("--shots", o.shots, "samples per image (0 = exact marginals)");
    run_cmd->add_option("--seed", o.seed, "sampling seed");
    run_cmd->add_option("--prep", o.prep, "state preparation: direct or synth (default direct)");
    run_cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    run_cmd->add_option("--out", o.out, "report path (default stdout)");

    auto *train = app.add_subcommand("train", "hill-climb a binary-weight model");
    add_data_flags(train, o.data);
    train->add_option("--seed", o.seed, "search seed");
    train->add_option("--iters", o.iters, "iterations per restart");
    train->add_option("--restarts", o.restarts, "independent restarts");
    train->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    train->add_option("--out", o.out, "model path (default stdout)");

    auto *eval = app.add_subcommand("eval", "closed-form accuracy of a model");
    eval->add_option("--model", o.model, "model JSON")->required();
    add_data_flags(eval, o.data);
    eval->add_option("--out", o.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*encode) return cmd_encode(o);
        if (*compile) return cmd_compile(o);
        if (*export_cmd) return cmd_export_qasm(o);
        if (*parse_cmd) return cmd_parse_qasm(o);
        if (*run_cmd) return cmd_run(o);
        if (*train) return cmd_train(o);
        if (*eval) return cmd_eval(o);
    } catch (const qnn::IoError &e) {
        std::cerr << "qnnc: " << e.what() << '\n';
        return kIo;
    } catch (const qnn::ParseError &e) {
        std::cerr << "qnnc: " << e.what() << '\n';
        return kParse;
    } catch (const std::logic_error &e) {
        std::cerr << "qnnc: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception &e) {
        std::cerr << "qnnc: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
