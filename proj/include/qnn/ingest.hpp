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
 * IDX container reading and writing for MNIST-style image/label files.
 *
 * Images: big-endian u32 magic 0x00000803, count, rows (28), cols (28),
 * then count * 784 row-major bytes. Labels: magic 0x00000801, count, then
 * count bytes in [0, 9].
 */
#pragma once

#include "qnn/encoding.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace qnn {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

using Bytes = std::vector<std::uint8_t>;

[[nodiscard]] std::vector<GrayImage> parse_idx_images(std::span<const std::uint8_t> bytes);
[[nodiscard]] std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes);

[[nodiscard]] Bytes serialize_idx_images(std::span<const GrayImage> images);
[[nodiscard]] Bytes serialize_idx_labels(std::span<const std::uint8_t> labels);

/// Whole file contents. Paths ending in ".gz" are gunzipped.
[[nodiscard]] Bytes read_file_bytes(const std::filesystem::path &path);

struct Dataset {
    std::vector<GrayImage> images;
    std::vector<std::uint8_t> labels;
};

/// Parses both files; throws ParseError if their counts differ.
[[nodiscard]] Dataset load_dataset(const std::filesystem::path &images,
                                   const std::filesystem::path &labels);

struct ClassPair {
    std::uint8_t first = 3;
    std::uint8_t second = 6;
};

struct LabeledInput {
    EncodedInput input;
    /// 0 for ClassPair::first, 1 for ClassPair::second.
    std::size_t label;
    /// Position in the unfiltered dataset.
    std::size_t source_index;
};

struct FilteredSet {
    std::vector<LabeledInput> items;
    /// Items of the pair whose pooled image was all zero.
    std::size_t dropped = 0;
};

/// Keeps the two classes in dataset order, pools and normalizes each image.
[[nodiscard]] FilteredSet filter_and_encode(const Dataset &dataset, ClassPair pair);

} // namespace qnn
