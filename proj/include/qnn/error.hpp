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

/**
 * @file
 * Exception types shared across the library.
 *
 * Precondition violations on library calls (bad qubit index, non-unit
 * amplitude vector, weight outside {-1,+1}) throw std::invalid_argument or
 * std::out_of_range. Malformed external input throws ParseError, and
 * filesystem trouble throws IoError. The command-line tool maps each family
 * to its own exit code.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnn {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text or binary input. Line and column are 1-based; 0 means
/// the position is not meaningful (binary formats).
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string &what, std::size_t line = 0,
                        std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    static std::string format(const std::string &what, std::size_t line,
                              std::size_t column) {
        if (line == 0) {
            return what;
        }
        return "line " + std::to_string(line) + ", column " +
               std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Structurally valid input that violates a domain rule (schema errors in
/// model files, weights outside {-1,+1}).
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qnn
