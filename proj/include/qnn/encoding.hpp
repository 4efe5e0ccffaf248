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

#include "qnn/gate.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qnn {

inline constexpr std::size_t kImageSide = 28;
inline constexpr std::size_t kPoolSide = 4;
inline constexpr std::size_t kEncodedSize = kPoolSide * kPoolSide;
inline constexpr std::size_t kEncodedQubits = 4;

/// Row-major 8-bit grayscale grid.
struct GrayImage {
    std::size_t rows = kImageSide;
    std::size_t cols = kImageSide;
    std::vector<std::uint8_t> pixels;

    friend bool operator==(const GrayImage &, const GrayImage &) = default;
};

/// Sixteen nonnegative amplitudes with unit L2 norm.
class EncodedInput {
  public:
    /// Validates nonnegativity and unit norm (within 1e-10).
    static EncodedInput from_values(std::span<const double, kEncodedSize> values);

    [[nodiscard]] std::span<const double, kEncodedSize> values() const noexcept {
        return values_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

  private:
    EncodedInput() = default;
    std::array<double, kEncodedSize> values_{};
};

/// 16x16 real orthogonal matrix, row-major.
class UnitaryMatrix {
  public:
    [[nodiscard]] double operator()(std::size_t row, std::size_t col) const {
        return m_[row * kEncodedSize + col];
    }
    double &operator()(std::size_t row, std::size_t col) {
        return m_[row * kEncodedSize + col];
    }

  private:
    std::array<double, kEncodedSize * kEncodedSize> m_{};
};

/// 7x7 average pooling of a 28x28 image into a row-major 4x4 grid.
[[nodiscard]] std::array<double, kEncodedSize> downsample(const GrayImage &image);

/// v / ||v||_2. Throws on a zero vector (blank image) or a negative entry.
[[nodiscard]] EncodedInput normalize(std::span<const double, kEncodedSize> v);

/// Householder reflection I - 2uu^T/(u^T u) with u = e0 - v, so that
/// column 0 is v.
[[nodiscard]] UnitaryMatrix complete_to_unitary(const EncodedInput &v);

/**
 * Rotation-tree angles. Level d holds 2^d angles, one per pattern c of
 * register qubits 0..d-1 (qubit 0 is bit 0 of c); the angle rotates register
 * qubit d so that its |1> branch carries the mass of indices whose low d+1
 * bits are c | 1 << d.
 */
[[nodiscard]] std::array<std::vector<double>, kEncodedQubits>
prep_tree_angles(const EncodedInput &v);

/**
 * Gate-level preparation of v from |0000> on `reg` using {RY, X, CX, CCX}.
 * Pattern controls are built from X conjugation and a Toffoli chain into
 * `aux`, which is returned to |00>. Zero angles emit nothing.
 */
[[nodiscard]] std::vector<Gate>
synthesize_prep(const EncodedInput &v, std::span<const Qubit, kEncodedQubits> reg,
                std::span<const Qubit, 2> aux);

/// 2^n amplitudes with each (register, input) pair loaded as a product
/// state and every other qubit in |0>.
struct RegisterLoad {
    std::array<Qubit, kEncodedQubits> reg;
    const EncodedInput *input;
};
[[nodiscard]] std::vector<std::complex<double>>
direct_init(std::size_t qubit_count, std::span<const RegisterLoad> loads);

} // namespace qnn
