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

#include "coho/observable.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coho/errors.hpp"

namespace coho {

namespace {

void require_compatible(const Observable& a, const Observable& b) {
  if (a.backend() != b.backend()) {
    throw BackendMismatch("observables use different backends");
  }
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("observables have different dimensions");
  }
}

cplx phase_value(unsigned exponent) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[exponent % 4];
}

}  // namespace

std::size_t Observable::dim() const {
  if (is_pauli()) {
    return std::size_t{1} << pauli().sites();
  }
  return dense().dim;
}

Observable multiply(const Observable& a, const Observable& b) {
  require_compatible(a, b);
  if (a.is_pauli()) {
    return Observable(a.pauli().multiplied(b.pauli()));
  }
  return Observable(a.dense().mul(b.dense()));
}

bool commutes(const Observable& a, const Observable& b) {
  require_compatible(a, b);
  if (a.is_pauli()) {
    return a.pauli().commutes_with(b.pauli());
  }
  const DenseOperator& x = a.dense();
  const DenseOperator& y = b.dense();
  return x.mul(y).max_abs_diff(y.mul(x)) <= kNumTol;
}

std::optional<int> scalar_sign(const Observable& a) {
  if (a.is_pauli()) {
    const PhasedPauli& p = a.pauli();
    if (!p.is_identity_word()) return std::nullopt;
    switch (p.phase_exponent()) {
      case 0:
        return 0;
      case 2:
        return 1;
      default:
        return std::nullopt;  // +-i I is scalar but not a sign
    }
  }
  const DenseOperator& m = a.dense();
  for (int sign = 0; sign < 2; ++sign) {
    DenseOperator target =
        DenseOperator::identity(m.dim).scaled(sign ? -1.0 : 1.0);
    if (m.max_abs_diff(target) <= kNumTol) return sign;
  }
  return std::nullopt;
}

std::optional<int> eigensign(const Observable& a, const StateVector& psi) {
  if (a.dim() != psi.dim()) {
    throw DimensionMismatch("eigensign: operator/state dimension mismatch");
  }
  StateVector image = apply(a, psi);
  if (image.max_abs_diff(psi) <= kNumTol) return 0;
  if (image.max_abs_diff(psi.scaled(-1.0)) <= kNumTol) return 1;
  return std::nullopt;
}

DenseOperator rotated_xy(long k, std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("rotated_xy: n must be even and >= 2");
  }
  long period = 2 * static_cast<long>(n);
  long kr = ((k % period) + period) % period;
  double angle = std::numbers::pi * static_cast<double>(kr) /
                 static_cast<double>(n);
  return pauli_x().scaled(std::cos(angle)).add(pauli_y().scaled(std::sin(angle)));
}

Observable negated(const Observable& a) {
  if (a.is_pauli()) {
    return Observable(a.pauli().negated());
  }
  return Observable(a.dense().scaled(-1.0));
}

StateVector apply(const Observable& a, const StateVector& psi) {
  if (a.dim() != psi.dim()) {
    throw DimensionMismatch("apply: operator/state dimension mismatch");
  }
  if (!a.is_pauli()) {
    return apply(a.dense(), psi);
  }
  const PhasedPauli& p = a.pauli();
  std::size_t n = p.sites();
  // Site i sits at amplitude-index bit (n-1-i).
  std::size_t x_mask = 0, z_mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t bit = std::size_t{1} << (n - 1 - i);
    if (p.x_bits().get(i)) x_mask |= bit;
    if (p.z_bits().get(i)) z_mask |= bit;
  }
  cplx phase = phase_value(p.phase_exponent());
  StateVector out(psi.dim());
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    double sign = (std::popcount(b & z_mask) & 1) ? -1.0 : 1.0;
    out.amp[b ^ x_mask] = phase * sign * psi.amp[b];
  }
  return out;
}

DenseOperator to_dense(const PhasedPauli& p) {
  DenseOperator out = DenseOperator::identity(1);
  for (std::size_t i = 0; i < p.sites(); ++i) {
    bool x = p.x_bits().get(i), z = p.z_bits().get(i);
    if (x && z) {
      out = out.kron(pauli_y());
    } else if (x) {
      out = out.kron(pauli_x());
    } else if (z) {
      out = out.kron(pauli_z());
    } else {
      out = out.kron(DenseOperator::identity(2));
    }
  }
  return out.scaled(phase_value(p.literal_phase_exponent()));
}

std::optional<std::string> observable_defect(const Observable& a,
                                             std::size_t max_dense_dim) {
  if (a.is_pauli()) {
    if (!a.pauli().hermitian()) {
      return "Pauli word has imaginary phase, not an observable";
    }
    return std::nullopt;  // hermitian Pauli words square to identity
  }
  const DenseOperator& m = a.dense();
  if (m.dim == 0 || (m.dim & (m.dim - 1)) != 0) {
    return "dense operator dimension must be a power of two";
  }
  if (m.dim > max_dense_dim) {
    return "dense operator exceeds the dimension cap";
  }
  if (m.max_abs_diff(m.adjoint()) > kNumTol) {
    return "dense operator is not hermitian";
  }
  if (m.mul(m).max_abs_diff(DenseOperator::identity(m.dim)) > kNumTol) {
    return "dense operator does not square to identity";
  }
  return std::nullopt;
}

}  // namespace coho
