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

#ifndef COHO_SCENARIOS_HPP
#define COHO_SCENARIOS_HPP

#include <utility>

#include "coho/cocycle.hpp"
#include "coho/complex.hpp"
#include "coho/mbqc.hpp"

namespace coho {

/// (|000> + |111>) / sqrt(2).
StateVector ghz_state();

/// State-independent ten-observable star: five four-edge contexts, one
/// of which multiplies to -I.
ChainComplex mermin_star();

/// The star with the GHZ state attached and the four nonlocal stabilizer
/// edges in E0; contraction leaves six edges and four faces.
RelativeComplex mermin_star_ghz();

/// The nine-observable two-qubit square: six three-edge contexts, one of
/// which multiplies to -I.
ChainComplex mermin_square();

/// The three-qubit OR-gate computation and its cocycle description, so
/// the two output routes can be compared.
struct GhzMbqc {
  MbqcSpec spec;
  RelativeComplex complex;
  InputGroup group;
  std::string ref_face;  // the all-X context
};
GhzMbqc ghz_mbqc();

/// Parameters and operator kit of the three-qubit rotated-observable
/// family indexed by N (even for the cohomological construction). The
/// single-qubit basis operators are X_k = cos(k pi/N) X + sin(k pi/N) Y,
/// and the correlated two-qubit operators on sites 1 and 3 encode the
/// adaptive basis choice.
struct IffyKit {
  std::size_t n;         // N
  double lambda_angle;   // pi/2 - pi/N

  explicit IffyKit(std::size_t n_param);

  /// 2x2 rotated operator X_k (any integer k, period 2N with sign flip
  /// at N).
  DenseOperator x_rot(long k) const;

  // 8x8 three-qubit operators (site 1 first).
  DenseOperator x1(long k) const;
  DenseOperator x2(long k) const;
  DenseOperator x3() const;
  DenseOperator y3() const;
  DenseOperator eps(long k) const;
  DenseOperator sigma_plus(long k) const;
  DenseOperator sigma_minus(long k) const;
  /// Correlated stabilizer with the adaptive site-1 basis.
  DenseOperator tau(long k) const;
  /// Product stabilizer X1_{N-k} (x) X2_k (x) X3.
  DenseOperator xbar(long k) const;
  /// tau with the site-3 branch fixed by c1.
  DenseOperator tau_conditional(long k, int c1) const;
  /// Projector on the (-1)^c1 eigenstate of Y at site 3.
  DenseOperator proj_y3(int c1) const;
};

/// Resource state |00>|nu> + |11>|omega> (normalized) at the family's
/// angle. N = 2 degenerates to the GHZ state.
StateVector iffy_state(std::size_t n);

/// The disc complex over the correlated observables: per k one face for
/// each of the two stabilizer relations, plus the recoupling belt. For
/// even N the total surface is a relative cycle with odd beta_psi; odd N
/// is accepted for diagnostics and fails the boundary check.
RelativeComplex iffy_complex(std::size_t n);

/// Indicator of all faces (the full surface) of an iffy-style complex.
BitVector full_surface(const RelativeComplex& rc);

/// The conditional complex for a fixed site-3 Y outcome c1; mu values
/// are supplied explicitly since no single state witnesses them.
RelativeComplex iffy_conditional(std::size_t n, int c1);

/// The mod-2 constraint system on outcome values (a_k, b_k, c0) whose
/// unsolvability is the original contextuality argument. Unknown order:
/// a_0..a_{N-1}, b_0..b_{N-1}, c0.
std::pair<BitMatrix, BitVector> iffy_classical_system(std::size_t n, int c1);

}  // namespace coho

#endif  // COHO_SCENARIOS_HPP
