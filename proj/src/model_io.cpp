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

#include "qnn/model_io.hpp"

#include "qnn/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qnn {

namespace {

using nlohmann::json;

const json &require(const json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(std::string(key) + ": missing field");
    }
    return *it;
}

const json &require_array(const json &value, const std::string &path,
                          std::size_t size) {
    if (!value.is_array() || value.size() != size) {
        throw ValidationError(path + ": expected an array of " +
                              std::to_string(size) + " entries");
    }
    return value;
}

int read_weight(const json &value, const std::string &path) {
    if (!value.is_number_integer() ||
        (value.get<long long>() != 1 && value.get<long long>() != -1)) {
        throw ValidationError(path + ": weight must be +1 or -1, got " +
                              value.dump());
    }
    return static_cast<int>(value.get<long long>());
}

template <std::size_t N>
void read_row(const json &value, const std::string &path, std::array<int, N> &row) {
    require_array(value, path, N);
    for (std::size_t k = 0; k < N; ++k) {
        row[k] = read_weight(value[k], path + "[" + std::to_string(k) + "]");
    }
}

template <typename Range> std::string join(const Range &values) {
    std::string s = "[";
    bool first = true;
    for (const auto &v : values) {
        if (!first) {
            s += ", ";
        }
        first = false;
        s += json(v).dump();
    }
    return s + "]";
}

} // namespace

std::string model_to_json(const QNNModel &model) {
    validate_model(model);
    std::ostringstream out;
    out << "{\n  \"W1\": [\n";
    for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
        out << "    " << join(model.w1[i]) << (i + 1 < kHiddenNeurons ? ",\n" : "\n");
    }
    out << "  ],\n  \"W2\": [\n";
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        out << "    " << join(model.w2[j]) << (j + 1 < kOutputNeurons ? ",\n" : "\n");
    }
    out << "  ],\n";
    out << "  \"norm_flag\": " << join(model.norm_flag) << ",\n";
    out << "  \"norm_para\": " << join(model.norm_para) << "\n}\n";
    return out.str();
}

QNNModel model_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("model: expected a JSON object");
    }
    for (const auto &[key, _] : doc.items()) {
        if (key != "W1" && key != "W2" && key != "norm_flag" && key != "norm_para") {
            throw ValidationError(key + ": unknown field");
        }
    }

    QNNModel model;
    const json &w1 = require_array(require(doc, "W1"), "W1", kHiddenNeurons);
    for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
        read_row(w1[i], "W1[" + std::to_string(i) + "]", model.w1[i]);
    }
    const json &w2 = require_array(require(doc, "W2"), "W2", kOutputNeurons);
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        read_row(w2[j], "W2[" + std::to_string(j) + "]", model.w2[j]);
    }
    const json &flags =
        require_array(require(doc, "norm_flag"), "norm_flag", kOutputNeurons);
    const json &paras =
        require_array(require(doc, "norm_para"), "norm_para", kOutputNeurons);
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        const std::string idx = "[" + std::to_string(j) + "]";
        if (!flags[j].is_boolean()) {
            throw ValidationError("norm_flag" + idx + ": expected a boolean");
        }
        model.norm_flag[j] = flags[j].get<bool>();
        if (!paras[j].is_number()) {
            throw ValidationError("norm_para" + idx + ": expected a number");
        }
        model.norm_para[j] = paras[j].get<double>();
        if (!(model.norm_para[j] >= 0.0 && model.norm_para[j] <= 1.0)) {
            throw ValidationError("norm_para" + idx + ": must lie in [0, 1]");
        }
    }
    return model;
}

QNNModel read_model(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open model file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

void write_model(const std::filesystem::path &path, const QNNModel &model) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write model file " + path.string());
    }
    out << model_to_json(model);
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

} // namespace qnn
