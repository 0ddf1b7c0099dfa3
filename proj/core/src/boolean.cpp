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

#include "coho/boolean.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace coho {

namespace {

int hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BooleanFunction::BooleanFunction(std::size_t arity,
                                 std::vector<std::uint8_t> tbl)
    : m(arity), table(std::move(tbl)) {
  if (table.size() != (std::size_t{1} << m)) {
    throw std::invalid_argument("BooleanFunction: table size must be 2^m");
  }
  for (std::uint8_t v : table) {
    if (v > 1) {
      throw std::invalid_argument("BooleanFunction: entries must be 0/1");
    }
  }
}

BooleanFunction BooleanFunction::constant(std::size_t m, int value) {
  return BooleanFunction(
      m, std::vector<std::uint8_t>(std::size_t{1} << m,
                                   static_cast<std::uint8_t>(value != 0)));
}

BooleanFunction BooleanFunction::linear(std::size_t m, std::size_t a) {
  std::vector<std::uint8_t> tbl(std::size_t{1} << m);
  for (std::size_t x = 0; x < tbl.size(); ++x) {
    tbl[x] = static_cast<std::uint8_t>(std::popcount(x & a) & 1);
  }
  return BooleanFunction(m, std::move(tbl));
}

BooleanFunction BooleanFunction::from_hex(std::string_view hex,
                                          std::size_t m) {
  if (hex.empty()) {
    throw std::invalid_argument("BooleanFunction::from_hex: empty string");
  }
  std::size_t bits = 4 * hex.size();
  if (m == 0) {
    // Infer the arity; the digit count must make 2^m bits.
    if (std::popcount(bits) != 1) {
      throw std::invalid_argument(
          "BooleanFunction::from_hex: digit count must be a power of two "
          "(or pass the arity explicitly)");
    }
    m = static_cast<std::size_t>(std::countr_zero(bits));
  } else if ((std::size_t{1} << m) > bits) {
    throw std::invalid_argument(
        "BooleanFunction::from_hex: too few digits for the given arity");
  }
  std::size_t size = std::size_t{1} << m;
  std::vector<std::uint8_t> tbl(size, 0);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    int v = hex_digit_value(hex[hex.size() - 1 - d]);
    if (v < 0) {
      throw std::invalid_argument("BooleanFunction::from_hex: bad digit");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t idx = 4 * d + b;
      if ((v >> b) & 1) {
        if (idx >= size) {
          throw std::invalid_argument(
              "BooleanFunction::from_hex: set bit beyond table size");
        }
        tbl[idx] = 1;
      }
    }
  }
  return BooleanFunction(m, std::move(tbl));
}

BooleanFunction BooleanFunction::from_bits(std::string_view bits) {
  if (std::popcount(bits.size()) != 1) {
    throw std::invalid_argument(
        "BooleanFunction::from_bits: length must be a power of two");
  }
  std::vector<std::uint8_t> tbl(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw std::invalid_argument("BooleanFunction::from_bits: expected 0/1");
    }
    tbl[i] = static_cast<std::uint8_t>(bits[i] - '0');
  }
  return BooleanFunction(static_cast<std::size_t>(std::countr_zero(bits.size())),
                         std::move(tbl));
}

std::string BooleanFunction::to_hex() const {
  std::size_t digits = std::max<std::size_t>(1, table.size() / 4);
  std::string s(digits, '0');
  static const char* kHex = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t idx = 4 * d + b;
      if (idx < table.size() && table[idx]) v |= 1 << b;
    }
    s[digits - 1 - d] = kHex[v];
  }
  return s;
}

std::string BooleanFunction::to_bits() const {
  std::string s(table.size(), '0');
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i]) s[i] = '1';
  }
  return s;
}

bool BooleanFunction::operator<(const BooleanFunction& o) const {
  if (m != o.m) return m < o.m;
  return table < o.table;
}

Spectrum walsh_spectrum(const BooleanFunction& f) {
  Spectrum s;
  s.m = f.m;
  s.coeff.resize(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    s.coeff[i] = f.table[i] ? -1 : 1;
  }
  // Standard in-place butterfly.
  for (std::size_t half = 1; half < s.coeff.size(); half <<= 1) {
    for (std::size_t block = 0; block < s.coeff.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        std::int64_t u = s.coeff[i];
        std::int64_t v = s.coeff[i + half];
        s.coeff[i] = u + v;
        s.coeff[i + half] = u - v;
      }
    }
  }
  return s;
}

std::size_t distance_to_linear(const BooleanFunction& f, bool include_affine) {
  Spectrum s = walsh_spectrum(f);
  std::int64_t best = s.coeff[0];
  for (std::int64_t c : s.coeff) {
    best = std::max(best, include_affine ? std::abs(c) : c);
  }
  // d_H(f, a.x) = (2^m - W(a)) / 2, minimized over a.
  std::int64_t size = static_cast<std::int64_t>(f.table.size());
  return static_cast<std::size_t>((size - best) / 2);
}

Rational nc_success_threshold(const BooleanFunction& f, bool include_affine) {
  Rational d(static_cast<long>(distance_to_linear(f, include_affine)));
  Rational total(static_cast<long>(f.table.size()));
  return Rational(1) - d / total;
}

Rational cf_success_bound(const BooleanFunction& f, const Rational& cf,
                          bool include_affine) {
  if (cf < 0 || cf > 1) {
    throw std::invalid_argument("cf_success_bound: cf must lie in [0, 1]");
  }
  Rational d(static_cast<long>(distance_to_linear(f, include_affine)));
  Rational total(static_cast<long>(f.table.size()));
  return Rational(1) - (Rational(1) - cf) * d / total;
}

bool is_bent(const BooleanFunction& f) {
  if (f.m % 2 != 0) {
    throw std::invalid_argument("is_bent: arity must be even");
  }
  Spectrum s = walsh_spectrum(f);
  std::int64_t target = std::int64_t{1} << (f.m / 2);
  for (std::int64_t c : s.coeff) {
    if (std::abs(c) != target) return false;
  }
  return true;
}

}  // namespace coho
