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

#ifndef COHO_PAULI_HPP
#define COHO_PAULI_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

#include "coho/gf2.hpp"

namespace coho {

/// An n-qubit Pauli word with exact phase tracking in {+1, +i, -1, -i}.
///
/// Internally the word is i^k * X^x * Z^z with k in Z_4 and x, z bit
/// vectors indexed by site (site 0 first). The phase relative to the
/// literal tensor of I/X/Y/Z letters differs by i^(#Y sites) and is
/// exposed via literal_phase_exponent(). A word is a valid observable
/// exactly when it is hermitian, i.e. its literal phase is +1 or -1.
class PhasedPauli {
 public:
  PhasedPauli() = default;
  /// Identity word on n sites.
  explicit PhasedPauli(std::size_t sites);
  PhasedPauli(unsigned phase_exponent, BitVector x, BitVector z);

  /// Parses e.g. "XIZ", "-XYY", "+Y". One letter of IXYZ per site,
  /// optionally preceded by a sign.
  static PhasedPauli parse(std::string_view text);
  /// Single letter at the given site of an n-site word, positive sign.
  static PhasedPauli single(std::size_t sites, std::size_t site, char letter);

  std::size_t sites() const { return x_.size(); }
  /// Exponent k of the internal phase i^k.
  unsigned phase_exponent() const { return phase_; }
  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }

  /// Exponent of i in front of the literal I/X/Y/Z word.
  unsigned literal_phase_exponent() const;
  /// True when the operator is hermitian (literal phase +1 or -1).
  bool hermitian() const { return literal_phase_exponent() % 2 == 0; }

  PhasedPauli multiplied(const PhasedPauli& rhs) const;
  bool commutes_with(const PhasedPauli& rhs) const;
  PhasedPauli negated() const;

  bool is_identity_word() const { return !x_.any() && !z_.any(); }

  bool operator==(const PhasedPauli&) const = default;

  /// Signed letter form, e.g. "-XYY". Hermitian words get "+"/"-";
  /// non-hermitian ones are prefixed "+i"/"-i".
  std::string to_string() const;

 private:
  unsigned phase_ = 0;  // i^phase_
  BitVector x_, z_;
};

}  // namespace coho

#endif  // COHO_PAULI_HPP
