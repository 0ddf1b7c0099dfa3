// Copyright 2026 The coho authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHO_GF2_HPP
#define COHO_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coho {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
///
/// Values are immutable by convention once handed to a consumer; all
/// operations on matrices/vectors below are pure functions.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_((length + 63) / 64, 0) {}

  static BitVector from_bits(std::initializer_list<int> bits);
  /// Builds from a string like "0110".
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  /// Parity of the bitwise AND, i.e. the GF(2) inner product.
  bool dot(const BitVector& other) const;

  bool any() const;
  std::size_t popcount() const;

  bool operator==(const BitVector&) const = default;

  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), rows bit-packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
        words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  /// Builds from row strings, e.g. {"10", "01"}.
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v) {
      words_[r * stride_ + (c >> 6)] |= mask;
    } else {
      words_[r * stride_ + (c >> 6)] &= ~mask;
    }
  }

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);

  /// Row operations used by elimination; word-wide XOR.
  void xor_rows(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  /// Matrix-vector product over GF(2); x.size() must equal cols().
  BitVector mul(const BitVector& x) const;
  /// Matrix-matrix product over GF(2); other.rows() must equal cols().
  BitMatrix mul(const BitMatrix& other) const;

  BitMatrix transposed() const;

  bool is_zero() const;
  bool operator==(const BitMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row rank over GF(2).
std::size_t rank(BitMatrix m);

/// Solves M x = b. Returns the canonical solution (pivot columns chosen
/// left to right, free variables set to zero) or nullopt when b is not in
/// the column space. Throws std::invalid_argument on dimension mismatch.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// Basis of the kernel {x : M x = 0}; empty when the kernel is trivial.
/// Basis vectors are emitted in increasing free-column order.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

}  // namespace coho

#endif  // COHO_GF2_HPP
