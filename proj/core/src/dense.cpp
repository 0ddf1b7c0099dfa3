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

#include "coho/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace coho {

DenseOperator DenseOperator::identity(std::size_t d) {
  DenseOperator m(d);
  for (std::size_t i = 0; i < d; ++i) {
    m.at(i, i) = 1.0;
  }
  return m;
}

DenseOperator DenseOperator::mul(const DenseOperator& o) const {
  if (dim != o.dim) {
    throw std::invalid_argument("DenseOperator::mul: dimension mismatch");
  }
  DenseOperator out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      cplx v = at(r, k);
      if (v == cplx{0, 0}) continue;
      for (std::size_t c = 0; c < dim; ++c) {
        out.at(r, c) += v * o.at(k, c);
      }
    }
  }
  return out;
}

DenseOperator DenseOperator::add(const DenseOperator& o) const {
  if (dim != o.dim) {
    throw std::invalid_argument("DenseOperator::add: dimension mismatch");
  }
  DenseOperator out = *this;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.a[i] += o.a[i];
  }
  return out;
}

DenseOperator DenseOperator::sub(const DenseOperator& o) const {
  return add(o.scaled(-1.0));
}

DenseOperator DenseOperator::scaled(cplx s) const {
  DenseOperator out = *this;
  for (cplx& v : out.a) {
    v *= s;
  }
  return out;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out.at(c, r) = std::conj(at(r, c));
    }
  }
  return out;
}

DenseOperator DenseOperator::kron(const DenseOperator& o) const {
  DenseOperator out(dim * o.dim);
  for (std::size_t r1 = 0; r1 < dim; ++r1) {
    for (std::size_t c1 = 0; c1 < dim; ++c1) {
      cplx v = at(r1, c1);
      if (v == cplx{0, 0}) continue;
      for (std::size_t r2 = 0; r2 < o.dim; ++r2) {
        for (std::size_t c2 = 0; c2 < o.dim; ++c2) {
          out.at(r1 * o.dim + r2, c1 * o.dim + c2) = v * o.at(r2, c2);
        }
      }
    }
  }
  return out;
}

double DenseOperator::max_abs_diff(const DenseOperator& o) const {
  if (dim != o.dim) {
    throw std::invalid_argument("DenseOperator::max_abs_diff: dimension mismatch");
  }
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - o.a[i]));
  }
  return m;
}

double DenseOperator::max_abs() const {
  double m = 0;
  for (const cplx& v : a) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

DenseOperator pauli_x() {
  DenseOperator m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

DenseOperator pauli_y() {
  DenseOperator m(2);
  m.at(0, 1) = cplx{0, -1};
  m.at(1, 0) = cplx{0, 1};
  return m;
}

DenseOperator pauli_z() {
  DenseOperator m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

DenseOperator projector_y(int sign) {
  DenseOperator m = DenseOperator::identity(2).add(
      pauli_y().scaled(sign >= 0 ? 1.0 : -1.0));
  return m.scaled(0.5);
}

double StateVector::norm() const {
  double n = 0;
  for (const cplx& v : amp) {
    n += std::norm(v);
  }
  return std::sqrt(n);
}

StateVector StateVector::normalized() const {
  double n = norm();
  if (n == 0) {
    throw std::invalid_argument("StateVector::normalized: zero vector");
  }
  return scaled(1.0 / n);
}

StateVector StateVector::add(const StateVector& o) const {
  if (dim() != o.dim()) {
    throw std::invalid_argument("StateVector::add: dimension mismatch");
  }
  StateVector out = *this;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    out.amp[i] += o.amp[i];
  }
  return out;
}

StateVector StateVector::sub(const StateVector& o) const {
  return add(o.scaled(-1.0));
}

StateVector StateVector::scaled(cplx s) const {
  StateVector out = *this;
  for (cplx& v : out.amp) {
    v *= s;
  }
  return out;
}

double StateVector::max_abs_diff(const StateVector& o) const {
  if (dim() != o.dim()) {
    throw std::invalid_argument("StateVector::max_abs_diff: dimension mismatch");
  }
  double m = 0;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    m = std::max(m, std::abs(amp[i] - o.amp[i]));
  }
  return m;
}

StateVector apply(const DenseOperator& op, const StateVector& psi) {
  if (op.dim != psi.dim()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  StateVector out(psi.dim());
  for (std::size_t r = 0; r < op.dim; ++r) {
    cplx acc{0, 0};
    for (std::size_t c = 0; c < op.dim; ++c) {
      acc += op.at(r, c) * psi.amp[c];
    }
    out.amp[r] = acc;
  }
  return out;
}

StateVector apply_single_site(const DenseOperator& op2, std::size_t site,
                              std::size_t n_sites, const StateVector& psi) {
  if (op2.dim != 2) {
    throw std::invalid_argument("apply_single_site: operator must be 2x2");
  }
  if (psi.dim() != (std::size_t{1} << n_sites) || site >= n_sites) {
    throw std::invalid_argument("apply_single_site: dimension mismatch");
  }
  std::size_t bit = std::size_t{1} << (n_sites - 1 - site);
  StateVector out(psi.dim());
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    std::size_t v = (b & bit) ? 1 : 0;
    std::size_t b0 = b & ~bit;  // index with the site bit cleared
    out.amp[b] = op2.at(v, 0) * psi.amp[b0] + op2.at(v, 1) * psi.amp[b0 | bit];
  }
  return out;
}

DenseOperator embed_single_site(const DenseOperator& op2, std::size_t site,
                                std::size_t n_sites) {
  if (op2.dim != 2 || site >= n_sites) {
    throw std::invalid_argument("embed_single_site: bad arguments");
  }
  DenseOperator out = DenseOperator::identity(1);
  for (std::size_t i = 0; i < n_sites; ++i) {
    out = out.kron(i == site ? op2 : DenseOperator::identity(2));
  }
  return out;
}

}  // namespace coho
