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

#include "coho/witness.hpp"

namespace coho {

bool is_contextual(const Verdict& v) {
  return std::holds_alternative<Contextual>(v);
}

Verdict decide(const RelativeComplex& rc) {
  BitMatrix d = rc.coboundary();  // faces x surviving edges
  std::optional<BitVector> s = solve(d, rc.beta_psi());
  if (s) {
    ValueAssignment assignment;
    const std::vector<std::string>& edges = rc.surviving_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      assignment.s[edges[i]] = s->get(i);
    }
    return NonContextual{std::move(assignment)};
  }
  // beta_psi lies outside im d, so by duality some 2-cycle pairs oddly
  // with it; parity is linear in the cycle, so a basis vector suffices.
  for (const BitVector& z : kernel_basis(rc.boundary_matrix())) {
    if (rc.beta_psi().dot(z)) {
      return Contextual{z};
    }
  }
  throw Error("decide: no odd-parity cycle found; duality violated");
}

bool check_certificate(const RelativeComplex& rc, const BitVector& z) {
  if (z.size() != rc.faces().size()) {
    throw DimensionMismatch("check_certificate: certificate length mismatch");
  }
  if (rc.boundary_matrix().mul(z).any()) return false;
  return rc.beta_psi().dot(z);
}

std::size_t h2_dimension(const RelativeComplex& rc) {
  std::size_t faces = rc.faces().size();
  std::size_t im_d1 = rank(rc.coboundary());
  if (rc.base().volumes().empty()) {
    return faces - im_d1;
  }
  std::size_t ker_d2 = faces - rank(rc.volume_coboundary());
  return ker_d2 - im_d1;
}

}  // namespace coho
