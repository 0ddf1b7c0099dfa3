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

#ifndef COHO_WITNESS_HPP
#define COHO_WITNESS_HPP

#include <map>
#include <string>
#include <variant>

#include "coho/complex.hpp"
#include "coho/gf2.hpp"

namespace coho {

/// A value assignment s on the surviving edges of a relative complex.
/// The corresponding +-1 assignment is (-1)^s.
struct ValueAssignment {
  std::map<std::string, int> s;
};

/// Witness outcome: a solving assignment, or a 2-cycle certificate z
/// with boundary zero and beta_psi(z) = 1.
struct NonContextual {
  ValueAssignment assignment;
};
struct Contextual {
  BitVector certificate;  // indicator over faces
};
using Verdict = std::variant<NonContextual, Contextual>;

bool is_contextual(const Verdict& v);

/// Decides contextuality: attempts to solve d s = beta_psi over GF(2).
/// When unsolvable, returns the first kernel basis vector of the
/// boundary map with odd beta_psi parity (a machine-checkable
/// certificate; one exists by GF(2) duality).
Verdict decide(const RelativeComplex& rc);

/// True iff the 2-chain z is a relative cycle with beta_psi(z) = 1.
/// Throws DimensionMismatch when z is not indexed by the faces.
bool check_certificate(const RelativeComplex& rc, const BitVector& z);

/// Dimension of the second cohomology group. With volumes present this
/// is dim ker(d2) - rank(d1); without them the cocycle condition is
/// vacuous and it is dim C^2 - rank(d1).
std::size_t h2_dimension(const RelativeComplex& rc);

}  // namespace coho

#endif  // COHO_WITNESS_HPP
