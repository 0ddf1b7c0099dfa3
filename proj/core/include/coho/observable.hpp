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

#ifndef COHO_OBSERVABLE_HPP
#define COHO_OBSERVABLE_HPP

#include <optional>
#include <string>
#include <variant>

#include "coho/dense.hpp"
#include "coho/pauli.hpp"

namespace coho {

/// Tolerance for all dense-backend comparisons.
inline constexpr double kNumTol = 1e-9;

/// Default cap on dense operator dimension admitted into scenarios.
inline constexpr std::size_t kDefaultMaxDenseDim = 1 << 10;

enum class Backend { pauli, dense };

/// A +-1-eigenvalue operator in one of two backends: an exact phased
/// Pauli word or a dense complex matrix.
class Observable {
 public:
  Observable(PhasedPauli p) : v_(std::move(p)) {}
  Observable(DenseOperator d) : v_(std::move(d)) {}

  Backend backend() const {
    return std::holds_alternative<PhasedPauli>(v_) ? Backend::pauli
                                                   : Backend::dense;
  }
  bool is_pauli() const { return backend() == Backend::pauli; }
  const PhasedPauli& pauli() const { return std::get<PhasedPauli>(v_); }
  const DenseOperator& dense() const { return std::get<DenseOperator>(v_); }

  /// Hilbert-space dimension (2^sites for the Pauli backend).
  std::size_t dim() const;

  bool operator==(const Observable&) const = default;

 private:
  std::variant<PhasedPauli, DenseOperator> v_;
};

/// Operator product. Throws on backend or dimension mismatch. Pauli
/// phases are tracked exactly in {+-1, +-i}.
Observable multiply(const Observable& a, const Observable& b);

/// True iff AB = BA (exact symplectic test for Pauli, within kNumTol for
/// dense). Throws on mismatch.
bool commutes(const Observable& a, const Observable& b);

/// Returns b iff the operator equals (-1)^b * I (within kNumTol for
/// dense); nullopt otherwise.
std::optional<int> scalar_sign(const Observable& a);

/// Returns mu iff A psi = (-1)^mu psi within kNumTol; nullopt otherwise.
/// Throws on dimension mismatch.
std::optional<int> eigensign(const Observable& a, const StateVector& psi);

/// cos(k pi / n) X + sin(k pi / n) Y as a 2x2 dense operator. k is
/// reduced mod 2n; n must be even and >= 2.
DenseOperator rotated_xy(long k, std::size_t n);

/// Observable with flipped sign (same equivalence class {+-T}).
Observable negated(const Observable& a);

/// Applies the operator to a state (either backend).
StateVector apply(const Observable& a, const StateVector& psi);

/// Dense matrix form of a phased Pauli word.
DenseOperator to_dense(const PhasedPauli& p);

/// Checks hermiticity and A^2 = I (exact for Pauli, within kNumTol for
/// dense) plus the dimension cap. Returns an error message or nullopt.
std::optional<std::string> observable_defect(const Observable& a,
                                             std::size_t max_dense_dim =
                                                 kDefaultMaxDenseDim);

}  // namespace coho

#endif  // COHO_OBSERVABLE_HPP
