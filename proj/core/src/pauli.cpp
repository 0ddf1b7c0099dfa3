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

#include "coho/pauli.hpp"

#include <stdexcept>

namespace coho {

PhasedPauli::PhasedPauli(std::size_t sites)
    : phase_(0), x_(sites), z_(sites) {}

PhasedPauli::PhasedPauli(unsigned phase_exponent, BitVector x, BitVector z)
    : phase_(phase_exponent % 4), x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("PhasedPauli: x/z length mismatch");
  }
}

PhasedPauli PhasedPauli::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("PhasedPauli::parse: empty word");
  }
  std::size_t n = text.size();
  BitVector x(n), z(n);
  unsigned y_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    switch (text[i]) {
      case 'I':
        break;
      case 'X':
        x.set(i, true);
        break;
      case 'Z':
        z.set(i, true);
        break;
      case 'Y':
        x.set(i, true);
        z.set(i, true);
        ++y_count;
        break;
      default:
        throw std::invalid_argument("PhasedPauli::parse: expected I/X/Y/Z");
    }
  }
  // Literal word equals i^y_count * X^x Z^z; fold in the leading sign.
  unsigned k = (y_count + (negative ? 2u : 0u)) % 4;
  return PhasedPauli(k, std::move(x), std::move(z));
}

PhasedPauli PhasedPauli::single(std::size_t sites, std::size_t site,
                                char letter) {
  if (site >= sites) {
    throw std::invalid_argument("PhasedPauli::single: site out of range");
  }
  std::string word(sites, 'I');
  word[site] = letter;
  return parse(word);
}

unsigned PhasedPauli::literal_phase_exponent() const {
  unsigned y_count = 0;
  for (std::size_t i = 0; i < sites(); ++i) {
    if (x_.get(i) && z_.get(i)) ++y_count;
  }
  return (phase_ + 4 - (y_count % 4)) % 4;
}

PhasedPauli PhasedPauli::multiplied(const PhasedPauli& rhs) const {
  if (sites() != rhs.sites()) {
    throw std::invalid_argument("PhasedPauli::multiplied: size mismatch");
  }
  // (i^a X^x1 Z^z1)(i^b X^x2 Z^z2) picks up (-1)^(z1.x2) moving Z past X.
  unsigned k = (phase_ + rhs.phase_ + (z_.dot(rhs.x_) ? 2u : 0u)) % 4;
  return PhasedPauli(k, x_ ^ rhs.x_, z_ ^ rhs.z_);
}

bool PhasedPauli::commutes_with(const PhasedPauli& rhs) const {
  if (sites() != rhs.sites()) {
    throw std::invalid_argument("PhasedPauli::commutes_with: size mismatch");
  }
  // Symplectic form: words commute iff x1.z2 + z1.x2 = 0.
  return x_.dot(rhs.z_) == z_.dot(rhs.x_);
}

PhasedPauli PhasedPauli::negated() const {
  return PhasedPauli((phase_ + 2) % 4, x_, z_);
}

std::string PhasedPauli::to_string() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[literal_phase_exponent()];
  for (std::size_t i = 0; i < sites(); ++i) {
    bool x = x_.get(i), z = z_.get(i);
    s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

}  // namespace coho
