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

#include "qnn/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qnn {

namespace {

constexpr std::size_t kBlock = kImageSide / kPoolSide;

void emit_controlled_ry(std::vector<Gate> &out, Qubit control, Qubit target,
                        double theta) {
    out.push_back(Gate::ry(target, theta / 2.0));
    out.push_back(Gate::cx(control, target));
    out.push_back(Gate::ry(target, -theta / 2.0));
    out.push_back(Gate::cx(control, target));
}

} // namespace

EncodedInput
EncodedInput::from_values(std::span<const double, kEncodedSize> values) {
    double norm = 0.0;
    for (std::size_t i = 0; i < kEncodedSize; ++i) {
        if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
            throw std::invalid_argument("encoded entry " + std::to_string(i) +
                                        " is negative or not finite");
        }
        norm += values[i] * values[i];
    }
    if (!(std::abs(norm - 1.0) <= 1e-10)) {
        throw std::invalid_argument("encoded input must have unit norm");
    }
    EncodedInput e;
    std::copy(values.begin(), values.end(), e.values_.begin());
    return e;
}

std::array<double, kEncodedSize> downsample(const GrayImage &image) {
    if (image.rows != kImageSide || image.cols != kImageSide ||
        image.pixels.size() != kImageSide * kImageSide) {
        throw std::invalid_argument("downsample expects a 28x28 image, got " +
                                    std::to_string(image.rows) + "x" +
                                    std::to_string(image.cols));
    }
    std::array<double, kEncodedSize> out{};
    for (std::size_t r = 0; r < kImageSide; ++r) {
        for (std::size_t c = 0; c < kImageSide; ++c) {
            out[(r / kBlock) * kPoolSide + c / kBlock] +=
                image.pixels[r * kImageSide + c];
        }
    }
    for (double &v : out) {
        v /= static_cast<double>(kBlock * kBlock);
    }
    return out;
}

EncodedInput normalize(std::span<const double, kEncodedSize> v) {
    double sq = 0.0;
    for (std::size_t i = 0; i < kEncodedSize; ++i) {
        if (!(v[i] >= 0.0) || !std::isfinite(v[i])) {
            throw std::invalid_argument("entry " + std::to_string(i) +
                                        " is negative or not finite");
        }
        sq += v[i] * v[i];
    }
    if (sq == 0.0) {
        throw std::invalid_argument("cannot encode an all-zero vector");
    }
    const double norm = std::sqrt(sq);
    std::array<double, kEncodedSize> scaled{};
    for (std::size_t i = 0; i < kEncodedSize; ++i) {
        scaled[i] = v[i] / norm;
    }
    return EncodedInput::from_values(scaled);
}

UnitaryMatrix complete_to_unitary(const EncodedInput &v) {
    UnitaryMatrix u;
    std::array<double, kEncodedSize> h{};
    h[0] = 1.0 - v[0];
    double hh = h[0] * h[0];
    for (std::size_t i = 1; i < kEncodedSize; ++i) {
        h[i] = -v[i];
        hh += h[i] * h[i];
    }
    for (std::size_t r = 0; r < kEncodedSize; ++r) {
        for (std::size_t c = 0; c < kEncodedSize; ++c) {
            const double id = r == c ? 1.0 : 0.0;
            u(r, c) = hh == 0.0 ? id : id - 2.0 * h[r] * h[c] / hh;
        }
    }
    return u;
}

std::array<std::vector<double>, kEncodedQubits>
prep_tree_angles(const EncodedInput &v) {
    std::array<std::vector<double>, kEncodedQubits> angles;
    for (std::size_t d = 0; d < kEncodedQubits; ++d) {
        const std::size_t patterns = std::size_t{1} << d;
        std::vector<double> left(patterns, 0.0);
        std::vector<double> right(patterns, 0.0);
        for (std::size_t i = 0; i < kEncodedSize; ++i) {
            const std::size_t c = i & (patterns - 1);
            const double mass = v[i] * v[i];
            if ((i >> d) & 1U) {
                right[c] += mass;
            } else {
                left[c] += mass;
            }
        }
        angles[d].resize(patterns);
        for (std::size_t c = 0; c < patterns; ++c) {
            angles[d][c] = 2.0 * std::atan2(std::sqrt(right[c]),
                                            std::sqrt(left[c]));
        }
    }
    return angles;
}

std::vector<Gate> synthesize_prep(const EncodedInput &v,
                                  std::span<const Qubit, kEncodedQubits> reg,
                                  std::span<const Qubit, 2> aux) {
    for (std::size_t i = 0; i < kEncodedQubits + 2; ++i) {
        const Qubit qi = i < kEncodedQubits ? reg[i] : aux[i - kEncodedQubits];
        for (std::size_t j = 0; j < i; ++j) {
            const Qubit qj =
                j < kEncodedQubits ? reg[j] : aux[j - kEncodedQubits];
            if (qi == qj) {
                throw std::invalid_argument(
                    "state preparation qubits must be distinct");
            }
        }
    }

    const auto angles = prep_tree_angles(v);
    std::vector<Gate> out;
    for (std::size_t d = 0; d < kEncodedQubits; ++d) {
        const Qubit target = reg[d];
        for (std::size_t c = 0; c < angles[d].size(); ++c) {
            const double theta = angles[d][c];
            if (theta == 0.0) {
                continue;
            }
            std::vector<Gate> flips;
            for (std::size_t k = 0; k < d; ++k) {
                if (((c >> k) & 1U) == 0) {
                    flips.push_back(Gate::x(reg[k]));
                }
            }
            std::vector<Gate> compute;
            Qubit control = 0;
            switch (d) {
            case 0:
                break;
            case 1:
                control = reg[0];
                break;
            case 2:
                compute.push_back(Gate::ccx(reg[0], reg[1], aux[0]));
                control = aux[0];
                break;
            default:
                compute.push_back(Gate::ccx(reg[0], reg[1], aux[0]));
                compute.push_back(Gate::ccx(reg[2], aux[0], aux[1]));
                control = aux[1];
                break;
            }
            out.insert(out.end(), flips.begin(), flips.end());
            out.insert(out.end(), compute.begin(), compute.end());
            if (d == 0) {
                out.push_back(Gate::ry(target, theta));
            } else {
                emit_controlled_ry(out, control, target, theta);
            }
            out.insert(out.end(), compute.rbegin(), compute.rend());
            out.insert(out.end(), flips.begin(), flips.end());
        }
    }
    for (Gate &g : out) {
        g.tag.stage = Stage::Prep;
    }
    return out;
}

std::vector<std::complex<double>>
direct_init(std::size_t qubit_count, std::span<const RegisterLoad> loads) {
    std::vector<std::complex<double>> amps(std::size_t{1} << qubit_count);
    // Enumerate the product of register basis states; all other qubits stay 0.
    std::size_t combos = 1;
    for (std::size_t r = 0; r < loads.size(); ++r) {
        combos *= kEncodedSize;
        for (Qubit q : loads[r].reg) {
            if (q >= qubit_count) {
                throw std::out_of_range("register qubit out of range");
            }
        }
    }
    for (std::size_t combo = 0; combo < combos; ++combo) {
        std::size_t index = 0;
        double amp = 1.0;
        std::size_t rest = combo;
        for (const RegisterLoad &load : loads) {
            const std::size_t local = rest % kEncodedSize;
            rest /= kEncodedSize;
            amp *= (*load.input)[local];
            for (std::size_t k = 0; k < kEncodedQubits; ++k) {
                if ((local >> k) & 1U) {
                    index |= std::size_t{1} << load.reg[k];
                }
            }
        }
        amps[index] += amp;
    }
    return amps;
}

} // namespace qnn
