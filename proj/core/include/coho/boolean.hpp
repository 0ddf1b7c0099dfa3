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

#ifndef COHO_BOOLEAN_HPP
#define COHO_BOOLEAN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coho/rational.hpp"

namespace coho {

/// Total Boolean function on m bits as a truth table of 2^m entries.
///
/// Input bitstrings (i_1, ..., i_m) index the table little-endian: bit
/// j-1 of the index holds i_j. The hex form reads the table as the
/// integer sum table[idx] * 2^idx, so OR on two bits (0,1,1,1) is "e".
struct BooleanFunction {
  std::size_t m = 0;
  std::vector<std::uint8_t> table;  // size 2^m, entries 0/1

  BooleanFunction() = default;
  BooleanFunction(std::size_t arity, std::vector<std::uint8_t> tbl);

  static BooleanFunction constant(std::size_t m, int value);
  /// Homogeneous linear function x -> a.x (a given little-endian).
  static BooleanFunction linear(std::size_t m, std::size_t a);
  static BooleanFunction from_hex(std::string_view hex, std::size_t m = 0);
  static BooleanFunction from_bits(std::string_view bits);

  std::uint8_t operator()(std::size_t idx) const { return table[idx]; }
  std::size_t size() const { return table.size(); }

  std::string to_hex() const;
  std::string to_bits() const;

  bool operator==(const BooleanFunction&) const = default;
  /// Lexicographic order on (m, table); fixes class representatives.
  bool operator<(const BooleanFunction& o) const;
};

/// Walsh-Hadamard spectrum of (-1)^f; coefficients are exact integers.
struct Spectrum {
  std::size_t m = 0;
  std::vector<std::int64_t> coeff;  // size 2^m
};

/// In-place fast transform; feasible up to m = 24.
Spectrum walsh_spectrum(const BooleanFunction& f);

/// Hamming distance to the closest homogeneous linear function a.x, or
/// to the closest affine function when include_affine is set. Computed
/// from the spectrum.
std::size_t distance_to_linear(const BooleanFunction& f,
                               bool include_affine = false);

/// 1 - distance_to_linear(f) / 2^m: the success ceiling that holds for
/// any non-contextual realization of f.
Rational nc_success_threshold(const BooleanFunction& f,
                              bool include_affine = false);

/// 1 - (1 - cf) * distance_to_linear(f) / 2^m for a contextual fraction
/// cf in [0, 1]. Throws std::invalid_argument when cf is out of range.
Rational cf_success_bound(const BooleanFunction& f, const Rational& cf,
                          bool include_affine = false);

/// True iff every spectrum magnitude equals 2^(m/2). Requires m even.
bool is_bent(const BooleanFunction& f);

}  // namespace coho

#endif  // COHO_BOOLEAN_HPP
