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

#ifndef COHO_DENSE_HPP
#define COHO_DENSE_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace coho {

using cplx = std::complex<double>;

/// Square complex matrix, row-major. Dimensions are powers of two when
/// the operator acts on qubits, but the container itself does not care.
struct DenseOperator {
  std::size_t dim = 0;
  std::vector<cplx> a;  // dim * dim entries, row-major

  DenseOperator() = default;
  explicit DenseOperator(std::size_t d) : dim(d), a(d * d, cplx{0, 0}) {}

  static DenseOperator identity(std::size_t d);

  cplx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  DenseOperator mul(const DenseOperator& o) const;
  DenseOperator add(const DenseOperator& o) const;
  DenseOperator sub(const DenseOperator& o) const;
  DenseOperator scaled(cplx s) const;
  DenseOperator adjoint() const;
  DenseOperator kron(const DenseOperator& o) const;

  /// Largest entry magnitude of (*this - o).
  double max_abs_diff(const DenseOperator& o) const;
  double max_abs() const;

  bool operator==(const DenseOperator&) const = default;
};

/// Elementary 2x2 operators.
DenseOperator pauli_x();
DenseOperator pauli_y();
DenseOperator pauli_z();
/// Projector onto the +1 (sign=+1) or -1 (sign=-1) eigenstate of Y.
DenseOperator projector_y(int sign);

/// Normalized complex amplitude vector over computational basis states.
/// Amplitude index bit (n-1-i) holds the value of site i, i.e. the first
/// site is the most significant bit, matching ket notation |q1 q2 ... qn>.
struct StateVector {
  std::vector<cplx> amp;

  StateVector() = default;
  explicit StateVector(std::size_t dim) : amp(dim, cplx{0, 0}) {}
  explicit StateVector(std::vector<cplx> amplitudes) : amp(std::move(amplitudes)) {}

  std::size_t dim() const { return amp.size(); }
  double norm() const;
  StateVector normalized() const;

  StateVector add(const StateVector& o) const;
  StateVector sub(const StateVector& o) const;
  StateVector scaled(cplx s) const;
  double max_abs_diff(const StateVector& o) const;

  bool operator==(const StateVector&) const = default;
};

StateVector apply(const DenseOperator& op, const StateVector& psi);

/// Applies a 2x2 operator to one site of an n-site state.
StateVector apply_single_site(const DenseOperator& op2, std::size_t site,
                              std::size_t n_sites, const StateVector& psi);

/// Embeds a 2x2 operator at the given site of an n-site system.
DenseOperator embed_single_site(const DenseOperator& op2, std::size_t site,
                                std::size_t n_sites);

}  // namespace coho

#endif  // COHO_DENSE_HPP
