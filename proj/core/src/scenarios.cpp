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

#include "coho/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coho/errors.hpp"

namespace coho {

namespace {

EdgeClass pauli_edge(const std::string& id, const std::string& word) {
  return EdgeClass{id, Observable(PhasedPauli::parse(word))};
}

}  // namespace

StateVector ghz_state() {
  StateVector psi(8);
  psi.amp[0] = 1.0 / std::numbers::sqrt2;
  psi.amp[7] = 1.0 / std::numbers::sqrt2;
  return psi;
}

namespace {

// Shared layout of the star: six local edges, four nonlocal product
// edges, four stabilizer faces and the context of the products.
struct StarParts {
  std::vector<EdgeClass> edges;
  std::vector<Face> faces;
};

StarParts star_parts() {
  StarParts p;
  p.edges = {
      pauli_edge("aX1", "XII"), pauli_edge("aX2", "IXI"),
      pauli_edge("aX3", "IIX"), pauli_edge("aY1", "YII"),
      pauli_edge("aY2", "IYI"), pauli_edge("aY3", "IIY"),
      pauli_edge("eXXX", "XXX"), pauli_edge("eXYY", "XYY"),
      pauli_edge("eYXY", "YXY"), pauli_edge("eYYX", "YYX"),
  };
  p.faces = {
      Face{"f1", {"aX1", "aX2", "aX3", "eXXX"}, 0},
      Face{"f2", {"aX1", "aY2", "aY3", "eXYY"}, 0},
      Face{"f3", {"aY1", "aX2", "aY3", "eYXY"}, 0},
      Face{"f4", {"aY1", "aY2", "aX3", "eYYX"}, 0},
      Face{"f5", {"eXXX", "eXYY", "eYXY", "eYYX"}, 0},
  };
  return p;
}

}  // namespace

ChainComplex mermin_star() {
  StarParts p = star_parts();
  return ChainComplex::build(std::move(p.edges), {}, std::nullopt, {},
                             std::move(p.faces));
}

RelativeComplex mermin_star_ghz() {
  StarParts p = star_parts();
  ChainComplex c = ChainComplex::build(
      std::move(p.edges), {"eXXX", "eXYY", "eYXY", "eYYX"}, ghz_state(), {},
      std::move(p.faces));
  return RelativeComplex::contract(c);
}

ChainComplex mermin_square() {
  std::vector<EdgeClass> edges = {
      pauli_edge("XI", "XI"), pauli_edge("IX", "IX"), pauli_edge("XX", "XX"),
      pauli_edge("IZ", "IZ"), pauli_edge("ZI", "ZI"), pauli_edge("ZZ", "ZZ"),
      pauli_edge("XZ", "XZ"), pauli_edge("ZX", "ZX"), pauli_edge("YY", "YY"),
  };
  std::vector<Face> faces = {
      Face{"r1", {"XI", "IX", "XX"}, 0}, Face{"r2", {"IZ", "ZI", "ZZ"}, 0},
      Face{"r3", {"XZ", "ZX", "YY"}, 0}, Face{"c1", {"XI", "IZ", "XZ"}, 0},
      Face{"c2", {"IX", "ZI", "ZX"}, 0}, Face{"c3", {"XX", "ZZ", "YY"}, 0},
  };
  return ChainComplex::build(std::move(edges), {}, std::nullopt, {},
                             std::move(faces));
}

GhzMbqc ghz_mbqc() {
  GhzMbqc g;

  g.spec.n_sites = 3;
  g.spec.n_inputs = 2;
  g.spec.n_outputs = 1;
  g.spec.state = ghz_state();
  for (std::size_t i = 0; i < 3; ++i) {
    g.spec.obs.push_back({Observable(PhasedPauli::parse("X")),
                          Observable(PhasedPauli::parse("Y"))});
  }
  g.spec.z_matrix = BitMatrix::from_rows({"111"});
  g.spec.t_matrix = BitMatrix(3, 3);
  // q1 = y, q2 = z, q3 = y + z.
  g.spec.s_matrix = BitMatrix::from_rows({"10", "01", "11"});
  g.spec.validate();

  g.complex = mermin_star_ghz();
  g.group.m = 2;
  g.group.pairs = {
      {0, "aX1", "aY1", BitVector::from_string("10")},
      {1, "aX2", "aY2", BitVector::from_string("01")},
      {2, "aX3", "aY3", BitVector::from_string("11")},
  };
  g.ref_face = "f1";
  return g;
}

IffyKit::IffyKit(std::size_t n_param) : n(n_param) {
  if (n < 2) {
    throw std::invalid_argument("IffyKit: N must be at least 2");
  }
  lambda_angle =
      std::numbers::pi / 2 - std::numbers::pi / static_cast<double>(n);
}

DenseOperator IffyKit::x_rot(long k) const {
  double angle =
      std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return pauli_x().scaled(std::cos(angle)).add(
      pauli_y().scaled(std::sin(angle)));
}

DenseOperator IffyKit::x1(long k) const {
  return embed_single_site(x_rot(k), 0, 3);
}

DenseOperator IffyKit::x2(long k) const {
  return embed_single_site(x_rot(k), 1, 3);
}

DenseOperator IffyKit::x3() const {
  return embed_single_site(pauli_x(), 2, 3);
}

DenseOperator IffyKit::y3() const {
  return embed_single_site(pauli_y(), 2, 3);
}

DenseOperator IffyKit::proj_y3(int c1) const {
  return embed_single_site(projector_y(c1 == 0 ? +1 : -1), 2, 3);
}

namespace {

// A (x) I (x) B on sites (1, 2, 3) from 2x2 factors A at site 1, B at 3.
DenseOperator site13(const DenseOperator& a, const DenseOperator& b) {
  return a.kron(DenseOperator::identity(2)).kron(b);
}

}  // namespace

DenseOperator IffyKit::eps(long k) const {
  return site13(x_rot(k - 1), projector_y(+1))
      .add(site13(x_rot(k + 1), projector_y(-1)));
}

DenseOperator IffyKit::sigma_plus(long k) const {
  return site13(x_rot(k - 1), projector_y(+1))
      .add(site13(DenseOperator::identity(2), projector_y(-1)));
}

DenseOperator IffyKit::sigma_minus(long k) const {
  return site13(DenseOperator::identity(2), projector_y(+1))
      .add(site13(x_rot(k + 1), projector_y(-1)));
}

DenseOperator IffyKit::tau(long k) const {
  long nn = static_cast<long>(n);
  return site13(x_rot(nn - 1 - k), projector_y(+1))
      .add(site13(x_rot(nn + 1 - k), projector_y(-1)))
      .mul(x2(k));
}

DenseOperator IffyKit::xbar(long k) const {
  long nn = static_cast<long>(n);
  return x1(nn - k).mul(x2(k)).mul(x3());
}

DenseOperator IffyKit::tau_conditional(long k, int c1) const {
  long nn = static_cast<long>(n);
  long shift = c1 == 0 ? -1 : 1;
  return x1(nn + shift - k).mul(x2(k));
}

StateVector iffy_state(std::size_t n) {
  IffyKit kit(n);
  double half = kit.lambda_angle / 2;
  double c = std::cos(half), s = std::sin(half);
  StateVector psi(8);
  // |00>|nu> + |11>|omega>, site 1 = most significant bit.
  psi.amp[0b000] = c;
  psi.amp[0b001] = s;
  psi.amp[0b110] = s;
  psi.amp[0b111] = c;
  return psi.normalized();
}

RelativeComplex iffy_complex(std::size_t n) {
  IffyKit kit(n);
  long nn = static_cast<long>(n);
  StateVector psi = iffy_state(n);

  auto x1_id = [](long j) { return "x1_" + std::to_string(j); };
  auto x2_id = [](long j) { return "x2_" + std::to_string(j); };
  auto eps_id = [](long j) { return "eps_" + std::to_string(j); };
  auto sp_id = [](long j) { return "sp_" + std::to_string(j); };
  auto sm_id = [](long j) { return "sm_" + std::to_string(j); };

  std::vector<EdgeClass> edges;
  // Representatives indexed 1..N close the disc with a single sign wrap:
  // the class of index N equals the class of index 0 with a flipped
  // representative, so the wrap lands on one recoupling face.
  for (long j = 1; j <= nn; ++j) {
    edges.push_back({x1_id(j), Observable(kit.x1(j))});
    edges.push_back({eps_id(j), Observable(kit.eps(j))});
  }
  for (long j = 0; j < nn; ++j) {
    edges.push_back({x2_id(j), Observable(kit.x2(j))});
  }
  edges.push_back({"x3", Observable(kit.x3())});
  edges.push_back({"y3", Observable(kit.y3())});
  for (long j = 1; j <= nn + 1; ++j) {
    edges.push_back({sp_id(j), Observable(kit.sigma_plus(j))});
  }
  for (long j = 0; j <= nn; ++j) {
    edges.push_back({sm_id(j), Observable(kit.sigma_minus(j))});
  }
  // Composite stabilizer edges, contracted away.
  std::vector<std::string> e0;
  for (long k = 0; k < nn; ++k) {
    std::string tid = "tau_" + std::to_string(k);
    std::string xid = "xbar_" + std::to_string(k);
    edges.push_back({tid, Observable(kit.eps(nn - k).mul(kit.x2(k)))});
    edges.push_back({xid, Observable(kit.xbar(k))});
    e0.push_back(tid);
    e0.push_back(xid);
  }

  std::vector<Face> faces;
  for (long k = 0; k < nn; ++k) {
    faces.push_back(Face{"stab_tau_" + std::to_string(k),
                         {eps_id(nn - k), x2_id(k), "tau_" + std::to_string(k)},
                         0});
    faces.push_back(Face{
        "stab_x_" + std::to_string(k),
        {x1_id(nn - k), x2_id(k), "x3", "xbar_" + std::to_string(k)},
        0});
  }
  for (long j = 1; j <= nn; ++j) {
    faces.push_back(
        Face{"rec_eps_" + std::to_string(j), {eps_id(j), sp_id(j), sm_id(j)}, 0});
    faces.push_back(Face{"rec_x1_" + std::to_string(j),
                         {x1_id(j), sp_id(j + 1), sm_id(j - 1)},
                         0});
  }
  faces.push_back(Face{"rec_yp", {"y3", sp_id(1), sp_id(nn + 1)}, 0});
  faces.push_back(Face{"rec_ym", {"y3", sm_id(0), sm_id(nn)}, 0});

  ChainComplex c = ChainComplex::build(std::move(edges), std::move(e0), psi,
                                       {}, std::move(faces));
  RelativeComplex rc = RelativeComplex::contract(c);

  if (n % 2 == 0) {
    // The full surface must close up; adjacency above guarantees it.
    if (rc.boundary_matrix().mul(full_surface(rc)).any()) {
      throw Error("iffy_complex: total surface is not a relative cycle");
    }
  }
  return rc;
}

BitVector full_surface(const RelativeComplex& rc) {
  BitVector all(rc.faces().size());
  for (std::size_t f = 0; f < rc.faces().size(); ++f) {
    all.set(f, true);
  }
  return all;
}

RelativeComplex iffy_conditional(std::size_t n, int c1) {
  if (c1 != 0 && c1 != 1) {
    throw std::invalid_argument("iffy_conditional: c1 must be 0 or 1");
  }
  IffyKit kit(n);
  long nn = static_cast<long>(n);

  auto x1_id = [](long j) { return "x1_" + std::to_string(j); };
  auto x2_id = [](long j) { return "x2_" + std::to_string(j); };

  std::vector<EdgeClass> edges;
  for (long j = 1; j <= nn; ++j) {
    edges.push_back({x1_id(j), Observable(kit.x1(j))});
  }
  for (long j = 0; j < nn; ++j) {
    edges.push_back({x2_id(j), Observable(kit.x2(j))});
  }
  edges.push_back({"x3", Observable(kit.x3())});

  // The conditional stabilizers hold only on the projected state, so mu
  // is supplied explicitly rather than computed from an eigenstate.
  std::vector<std::string> e0;
  std::map<std::string, int> mu;
  for (long k = 0; k < nn; ++k) {
    std::string tid = "tau_" + std::to_string(k);
    std::string xid = "xbar_" + std::to_string(k);
    edges.push_back({tid, Observable(kit.tau_conditional(k, c1))});
    edges.push_back({xid, Observable(kit.xbar(k))});
    e0.push_back(tid);
    e0.push_back(xid);
    mu[tid] = 1;
    mu[xid] = 1;
  }

  std::vector<Face> faces;
  long shift = c1 == 0 ? -1 : 1;
  for (long k = 0; k < nn; ++k) {
    faces.push_back(Face{
        "stab_x_" + std::to_string(k),
        {x1_id(nn - k), x2_id(k), "x3", "xbar_" + std::to_string(k)},
        0});
    // tau_conditional(k) acts as X1 at index N + shift - k; fold the
    // index into the 1..N representative range.
    long idx = nn + shift - k;
    if (idx > nn) idx -= nn;  // the class of index N+1 is index 1
    if (idx < 1) idx += nn;   // the class of index 0 is index N
    faces.push_back(Face{"cond_" + std::to_string(k),
                         {x1_id(idx), x2_id(k), "tau_" + std::to_string(k)},
                         0});
  }

  ChainComplex c = ChainComplex::build(std::move(edges), std::move(e0),
                                       std::nullopt, std::move(mu),
                                       std::move(faces));
  return RelativeComplex::contract(c);
}

std::pair<BitMatrix, BitVector> iffy_classical_system(std::size_t n, int c1) {
  if (c1 != 0 && c1 != 1) {
    throw std::invalid_argument("iffy_classical_system: c1 must be 0 or 1");
  }
  long nn = static_cast<long>(n);
  // Unknowns: a_0..a_{N-1}, b_0..b_{N-1}, c0.
  std::size_t cols = 2 * n + 1;
  std::size_t c0 = 2 * n;
  std::vector<std::pair<std::vector<std::size_t>, int>> rows;

  auto a = [](long k) { return static_cast<std::size_t>(k); };
  auto b = [nn](long k) { return static_cast<std::size_t>(nn + k); };

  // Product-stabilizer constraints: a_0 + b_0 + c0 = 0 and
  // a_k + b_{N-k} + c0 = 1 for k = 1..N-1.
  rows.push_back({{a(0), b(0), c0}, 0});
  for (long k = 1; k < nn; ++k) {
    rows.push_back({{a(k), b(nn - k), c0}, 1});
  }
  if (c1 == 0) {
    // a_l + b_{N-1-l} = 1 for l = 0..N-1.
    for (long l = 0; l < nn; ++l) {
      rows.push_back({{a(l), b(nn - 1 - l)}, 1});
    }
  } else {
    // The pairs (l, N+1-l) wrap at both ends; out-of-range outcome
    // labels flip value with the observable sign, absorbing constants.
    rows.push_back({{a(1), b(0)}, 0});
    rows.push_back({{a(0), b(1)}, 0});
    for (long l = 2; l < nn; ++l) {
      rows.push_back({{a(l), b(nn + 1 - l)}, 1});
    }
  }

  BitMatrix m(rows.size(), cols);
  BitVector rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t col : rows[r].first) {
      m.set(r, col, true);
    }
    rhs.set(r, rows[r].second);
  }
  return {m, rhs};
}

}  // namespace coho
