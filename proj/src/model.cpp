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

#include "qnn/model.hpp"

#include "qnn/error.hpp"

#include <string>

namespace qnn {

void validate_weights(std::span<const int> weights, const char *field) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] != 1 && weights[i] != -1) {
            throw ValidationError(std::string(field) + "[" +
                                  std::to_string(i) +
                                  "]: weight must be +1 or -1, got " +
                                  std::to_string(weights[i]));
        }
    }
}

void validate_model(const QNNModel &model) {
    for (std::size_t i = 0; i < kHiddenNeurons; ++i) {
        const std::string field = "W1[" + std::to_string(i) + "]";
        validate_weights(model.w1[i], field.c_str());
    }
    for (std::size_t j = 0; j < kOutputNeurons; ++j) {
        const std::string field = "W2[" + std::to_string(j) + "]";
        validate_weights(model.w2[j], field.c_str());
        const double g = model.norm_para[j];
        if (!(g >= 0.0 && g <= 1.0)) {
            throw ValidationError("norm_para[" + std::to_string(j) +
                                  "]: must lie in [0, 1]");
        }
    }
}

} // namespace qnn
