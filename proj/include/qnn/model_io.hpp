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

#pragma once

#include "qnn/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qnn {

/**
 * JSON model text:
 *
 *   {
 *     "W1": [[16 x +-1], [16 x +-1]],
 *     "W2": [[+-1, +-1], [+-1, +-1]],
 *     "norm_flag": [bool, bool],
 *     "norm_para": [number, number]
 *   }
 *
 * Unknown keys are rejected. Schema errors throw ValidationError with the
 * field path (e.g. "W1[0][5]"); malformed JSON throws ParseError.
 */
[[nodiscard]] std::string model_to_json(const QNNModel &model);
[[nodiscard]] QNNModel model_from_json(std::string_view text);

[[nodiscard]] QNNModel read_model(const std::filesystem::path &path);
void write_model(const std::filesystem::path &path, const QNNModel &model);

} // namespace qnn
