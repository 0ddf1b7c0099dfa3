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

#include "coho/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace coho {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  BitVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    v.set(i++, b != 0);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw std::invalid_argument("BitVector::from_string: expected 0/1");
    }
    v.set(i, bits[i] == '1');
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (length_ != other.length_) {
    throw std::invalid_argument("BitVector xor: length mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (length_ != other.length_) {
    throw std::invalid_argument("BitVector dot: length mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return std::popcount(acc) & 1;
}

bool BitVector::any() const {
  for (std::uint64_t w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  BitMatrix m(r, c);
  std::size_t i = 0;
  for (std::string_view s : rows) {
    if (s.size() != c) {
      throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (s[j] != '0' && s[j] != '1') {
        throw std::invalid_argument("BitMatrix::from_rows: expected 0/1");
      }
      m.set(i, j, s[j] == '1');
    }
    ++i;
  }
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    v.set(j, get(r, j));
  }
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("BitMatrix::set_row: length mismatch");
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    set(r, j, v.get(j));
  }
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
  std::uint64_t* d = &words_[dst * stride_];
  const std::uint64_t* s = &words_[src * stride_];
  for (std::size_t w = 0; w < stride_; ++w) {
    d[w] ^= s[w];
  }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < stride_; ++w) {
    std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
  }
}

BitVector BitMatrix::mul(const BitVector& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("BitMatrix::mul: dimension mismatch");
  }
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < stride_; ++w) {
      acc ^= words_[r * stride_ + w] & x.words()[w];
    }
    out.set(r, std::popcount(acc) & 1);
  }
  return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& other) const {
  if (other.rows_ != cols_) {
    throw std::invalid_argument("BitMatrix::mul: dimension mismatch");
  }
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (get(r, k)) {
        for (std::size_t w = 0; w < other.stride_; ++w) {
          out.words_[r * out.stride_ + w] ^= other.words_[k * other.stride_ + w];
        }
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.set(c, r, true);
    }
  }
  return out;
}

bool BitMatrix::is_zero() const {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      s += get(r, c) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

namespace {

// Reduced row echelon form in place. Returns the pivot column of each
// pivot row, in order. Pivots are chosen left to right, which fixes the
// canonical solution and kernel basis.
std::vector<std::size_t> rref(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && !m.get(sel, col)) {
      ++sel;
    }
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != row && m.get(r, col)) {
        m.xor_rows(r, row);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(BitMatrix m) {
  return rref(m).size();
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: rhs length must equal row count");
  }
  // Augmented system [M | b].
  BitMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      aug.set(r, c, m.get(r, c));
    }
    aug.set(r, m.cols(), b.get(r));
  }
  std::vector<std::size_t> pivots = rref(aug);
  // A pivot in the augmentation column marks an inconsistent row 0...0|1.
  if (!pivots.empty() && pivots.back() == m.cols()) {
    return std::nullopt;
  }
  BitVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x.set(pivots[r], aug.get(r, m.cols()));
  }
  return x;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  BitMatrix red = m;
  std::vector<std::size_t> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free, true);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (red.get(r, free)) {
        v.set(pivots[r], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace coho
