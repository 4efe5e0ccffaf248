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

#include "qnn/ingest.hpp"

#include "qnn/error.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>

namespace qnn {

namespace {

constexpr std::size_t kImageBytes = kImageSide * kImageSide;

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t at) {
    return (std::uint32_t{bytes[at]} << 24) | (std::uint32_t{bytes[at + 1]} << 16) |
           (std::uint32_t{bytes[at + 2]} << 8) | std::uint32_t{bytes[at + 3]};
}

void write_be32(Bytes &out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::string hex(std::uint32_t v) {
    static const char *digits = "0123456789abcdef";
    std::string s = "0x";
    for (int shift = 28; shift >= 0; shift -= 4) {
        s.push_back(digits[(v >> shift) & 0xF]);
    }
    return s;
}

Bytes gunzip_file(const std::filesystem::path &path) {
    std::unique_ptr<gzFile_s, decltype(&gzclose)> gz(gzopen(path.c_str(), "rb"),
                                                     &gzclose);
    if (!gz) {
        throw IoError("cannot open " + path.string());
    }
    Bytes out;
    std::array<std::uint8_t, 1 << 16> buf{};
    for (;;) {
        const int n = gzread(gz.get(), buf.data(), static_cast<unsigned>(buf.size()));
        if (n < 0) {
            int code = 0;
            throw ParseError(path.string() + ": gzip error: " +
                             gzerror(gz.get(), &code));
        }
        if (n == 0) {
            break;
        }
        out.insert(out.end(), buf.begin(), buf.begin() + n);
    }
    return out;
}

} // namespace

std::vector<GrayImage> parse_idx_images(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 16) {
        throw ParseError("image file truncated: header needs 16 bytes, got " +
                         std::to_string(bytes.size()));
    }
    const std::uint32_t magic = read_be32(bytes, 0);
    if (magic == kIdxLabelMagic) {
        throw ParseError("label magic in image file");
    }
    if (magic != kIdxImageMagic) {
        throw ParseError("bad image magic " + hex(magic));
    }
    const std::size_t count = read_be32(bytes, 4);
    const std::size_t rows = read_be32(bytes, 8);
    const std::size_t cols = read_be32(bytes, 12);
    if (rows != kImageSide || cols != kImageSide) {
        throw ParseError("image dimensions must be 28x28, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
    const std::size_t payload = bytes.size() - 16;
    if (payload / kImageBytes < count) {
        throw ParseError("image file truncated: " + std::to_string(count) +
                         " images need " + std::to_string(count * kImageBytes) +
                         " payload bytes, got " + std::to_string(payload));
    }
    if (payload != count * kImageBytes) {
        throw ParseError("image file has " +
                         std::to_string(payload - count * kImageBytes) +
                         " trailing bytes");
    }
    std::vector<GrayImage> images(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto first = bytes.begin() + 16 + static_cast<std::ptrdiff_t>(i * kImageBytes);
        images[i].pixels.assign(first, first + static_cast<std::ptrdiff_t>(kImageBytes));
    }
    return images;
}

std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8) {
        throw ParseError("label file truncated: header needs 8 bytes, got " +
                         std::to_string(bytes.size()));
    }
    const std::uint32_t magic = read_be32(bytes, 0);
    if (magic == kIdxImageMagic) {
        throw ParseError("image magic in label file");
    }
    if (magic != kIdxLabelMagic) {
        throw ParseError("bad label magic " + hex(magic));
    }
    const std::size_t count = read_be32(bytes, 4);
    const std::size_t payload = bytes.size() - 8;
    if (payload < count) {
        throw ParseError("label file truncated: " + std::to_string(count) +
                         " labels, got " + std::to_string(payload) + " bytes");
    }
    if (payload != count) {
        throw ParseError("label file has " + std::to_string(payload - count) +
                         " trailing bytes");
    }
    std::vector<std::uint8_t> labels(bytes.begin() + 8, bytes.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] > 9) {
            throw ParseError("label " + std::to_string(i) + " is " +
                             std::to_string(labels[i]) + ", expected 0-9");
        }
    }
    return labels;
}

Bytes serialize_idx_images(std::span<const GrayImage> images) {
    Bytes out;
    out.reserve(16 + images.size() * kImageBytes);
    write_be32(out, kIdxImageMagic);
    write_be32(out, static_cast<std::uint32_t>(images.size()));
    write_be32(out, kImageSide);
    write_be32(out, kImageSide);
    for (const GrayImage &img : images) {
        if (img.rows != kImageSide || img.cols != kImageSide ||
            img.pixels.size() != kImageBytes) {
            throw std::invalid_argument("only 28x28 images can be serialized");
        }
        out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    }
    return out;
}

Bytes serialize_idx_labels(std::span<const std::uint8_t> labels) {
    Bytes out;
    out.reserve(8 + labels.size());
    write_be32(out, kIdxLabelMagic);
    write_be32(out, static_cast<std::uint32_t>(labels.size()));
    out.insert(out.end(), labels.begin(), labels.end());
    return out;
}

Bytes read_file_bytes(const std::filesystem::path &path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw IoError("no such file: " + path.string());
    }
    if (path.extension() == ".gz") {
        return gunzip_file(path);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Dataset load_dataset(const std::filesystem::path &images,
                     const std::filesystem::path &labels) {
    Dataset ds;
    ds.images = parse_idx_images(read_file_bytes(images));
    ds.labels = parse_idx_labels(read_file_bytes(labels));
    if (ds.images.size() != ds.labels.size()) {
        throw ParseError(std::to_string(ds.images.size()) + " images but " +
                         std::to_string(ds.labels.size()) + " labels");
    }
    return ds;
}

FilteredSet filter_and_encode(const Dataset &dataset, ClassPair pair) {
    if (pair.first == pair.second || pair.first > 9 || pair.second > 9) {
        throw std::invalid_argument("class pair must be two distinct digits");
    }
    if (dataset.images.size() != dataset.labels.size()) {
        throw std::invalid_argument("dataset images and labels differ in length");
    }
    FilteredSet out;
    for (std::size_t i = 0; i < dataset.labels.size(); ++i) {
        const std::uint8_t label = dataset.labels[i];
        if (label != pair.first && label != pair.second) {
            continue;
        }
        const auto pooled = downsample(dataset.images[i]);
        if (std::all_of(pooled.begin(), pooled.end(),
                        [](double v) { return v == 0.0; })) {
            ++out.dropped;
            continue;
        }
        out.items.push_back({normalize(pooled),
                             label == pair.first ? std::size_t{0} : std::size_t{1}, i});
    }
    return out;
}

} // namespace qnn
