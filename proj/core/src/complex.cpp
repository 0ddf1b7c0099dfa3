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

#include "coho/complex.hpp"

#include <algorithm>
#include <set>

namespace coho {

ChainComplex ChainComplex::build(std::vector<EdgeClass> edges,
                                 std::vector<std::string> e0,
                                 std::optional<StateVector> state,
                                 std::map<std::string, int> mu,
                                 std::vector<Face> faces,
                                 std::vector<Volume> volumes,
                                 const BuildOptions& options) {
  ChainComplex c;
  c.edges_ = std::move(edges);
  c.e0_ = std::move(e0);
  c.faces_ = std::move(faces);
  c.volumes_ = std::move(volumes);
  c.state_ = std::move(state);

  for (std::size_t i = 0; i < c.edges_.size(); ++i) {
    if (!c.edge_idx_.emplace(c.edges_[i].id, i).second) {
      throw ComplexError(ComplexError::Kind::duplicate_edge,
                         "duplicate edge id '" + c.edges_[i].id + "'");
    }
  }

  // All observables must share a backend and dimension and be valid.
  for (const EdgeClass& e : c.edges_) {
    if (auto defect = observable_defect(e.rep, options.max_dense_dim)) {
      throw ComplexError(ComplexError::Kind::invalid_observable,
                         "edge '" + e.id + "': " + *defect);
    }
    if (e.rep.backend() != c.edges_.front().rep.backend() ||
        e.rep.dim() != c.edges_.front().rep.dim()) {
      throw ComplexError(ComplexError::Kind::invalid_observable,
                         "edge '" + e.id +
                             "': backend/dimension differs from the rest "
                             "of the scenario");
    }
  }

  // E0 membership and mu. With a state, mu comes from eigensign; explicit
  // entries must agree. Without one, every E0 edge needs an explicit mu.
  for (const std::string& id : c.e0_) {
    auto it = c.edge_idx_.find(id);
    if (it == c.edge_idx_.end()) {
      throw ComplexError(ComplexError::Kind::unknown_edge,
                         "E0 references unknown edge '" + id + "'");
    }
    auto given = mu.find(id);
    if (c.state_) {
      std::optional<int> sign = eigensign(c.edges_[it->second].rep, *c.state_);
      if (!sign) {
        throw ComplexError(ComplexError::Kind::not_eigenstate,
                           "state is not an eigenstate of E0 edge '" + id +
                               "'");
      }
      if (given != mu.end() && given->second != *sign) {
        throw ComplexError(ComplexError::Kind::not_eigenstate,
                           "explicit mu for edge '" + id +
                               "' contradicts the eigensign");
      }
      c.mu_[id] = *sign;
    } else {
      if (given == mu.end()) {
        throw ComplexError(ComplexError::Kind::missing_mu,
                           "E0 edge '" + id +
                               "' needs mu: no state to compute it from");
      }
      c.mu_[id] = given->second & 1;
    }
  }

  // Validate faces and compute beta from the operator products.
  for (std::size_t fi = 0; fi < c.faces_.size(); ++fi) {
    Face& f = c.faces_[fi];
    if (c.face_idx_.count(f.id)) {
      throw ComplexError(ComplexError::Kind::duplicate_face,
                         "duplicate face id '" + f.id + "'");
    }
    std::set<std::string> seen;
    for (const std::string& id : f.edges) {
      if (!c.edge_idx_.count(id)) {
        throw ComplexError(ComplexError::Kind::unknown_edge,
                           "face '" + f.id + "' references unknown edge '" +
                               id + "'");
      }
      if (!seen.insert(id).second) {
        throw ComplexError(ComplexError::Kind::duplicate_edge,
                           "face '" + f.id + "' repeats edge '" + id + "'");
      }
    }
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
      for (std::size_t j = i + 1; j < f.edges.size(); ++j) {
        const Observable& a = c.edges_[c.edge_idx_.at(f.edges[i])].rep;
        const Observable& b = c.edges_[c.edge_idx_.at(f.edges[j])].rep;
        if (!commutes(a, b)) {
          throw ComplexError(ComplexError::Kind::non_commuting_face,
                             "face '" + f.id + "': edges '" + f.edges[i] +
                                 "' and '" + f.edges[j] + "' do not commute");
        }
      }
    }
    if (f.edges.empty()) {
      f.beta = 0;
    } else {
      Observable product = c.edges_[c.edge_idx_.at(f.edges[0])].rep;
      for (std::size_t i = 1; i < f.edges.size(); ++i) {
        product = multiply(product, c.edges_[c.edge_idx_.at(f.edges[i])].rep);
      }
      std::optional<int> sign = scalar_sign(product);
      if (!sign) {
        throw ComplexError(ComplexError::Kind::non_scalar_face,
                           "face '" + f.id +
                               "': product of representatives is not +-I");
      }
      f.beta = *sign;
    }
    c.face_idx_.emplace(f.id, fi);
  }

  // Each volume must be bounded by a 2-cycle: the boundaries of its
  // faces cancel. This is what makes d compose to zero.
  for (const Volume& v : c.volumes_) {
    std::map<std::string, int> count;
    std::set<std::string> seen;
    for (const std::string& fid : v.faces) {
      auto it = c.face_idx_.find(fid);
      if (it == c.face_idx_.end()) {
        throw ComplexError(ComplexError::Kind::unknown_face,
                           "volume '" + v.id + "' references unknown face '" +
                               fid + "'");
      }
      if (!seen.insert(fid).second) {
        throw ComplexError(ComplexError::Kind::duplicate_face,
                           "volume '" + v.id + "' repeats face '" + fid + "'");
      }
      for (const std::string& eid : c.faces_[it->second].edges) {
        count[eid] ^= 1;
      }
    }
    for (const auto& [eid, parity] : count) {
      if (parity) {
        throw ComplexError(ComplexError::Kind::volume_not_cycle,
                           "volume '" + v.id +
                               "': face boundaries do not cancel on edge '" +
                               eid + "'");
      }
    }
  }

  return c;
}

std::size_t ChainComplex::edge_index(const std::string& id) const {
  auto it = edge_idx_.find(id);
  if (it == edge_idx_.end()) {
    throw ComplexError(ComplexError::Kind::unknown_edge,
                       "unknown edge '" + id + "'");
  }
  return it->second;
}

std::size_t ChainComplex::face_index(const std::string& id) const {
  auto it = face_idx_.find(id);
  if (it == face_idx_.end()) {
    throw ComplexError(ComplexError::Kind::unknown_face,
                       "unknown face '" + id + "'");
  }
  return it->second;
}

BitMatrix ChainComplex::boundary_matrix() const {
  BitMatrix m(edges_.size(), faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (const std::string& eid : faces_[f].edges) {
      m.set(edge_index(eid), f, true);
    }
  }
  return m;
}

BitMatrix ChainComplex::volume_boundary_matrix() const {
  BitMatrix m(faces_.size(), volumes_.size());
  for (std::size_t v = 0; v < volumes_.size(); ++v) {
    for (const std::string& fid : volumes_[v].faces) {
      m.set(face_index(fid), v, true);
    }
  }
  return m;
}

BitVector ChainComplex::beta() const {
  BitVector b(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    b.set(f, faces_[f].beta);
  }
  return b;
}

RelativeComplex RelativeComplex::contract(const ChainComplex& c) {
  RelativeComplex rc;
  rc.base_ = c;

  for (const EdgeClass& e : c.edges()) {
    if (!c.is_e0(e.id)) {
      rc.surviving_idx_.emplace(e.id, rc.surviving_.size());
      rc.surviving_.push_back(e.id);
    }
  }

  // Keep a face iff some boundary edge survives; beta_psi = beta + d mu,
  // i.e. beta plus the mu values of the face's E0 edges.
  std::vector<int> beta_psi_bits;
  for (const Face& f : c.faces()) {
    std::vector<std::size_t> boundary;
    int dmu = 0;
    for (const std::string& eid : f.edges) {
      auto it = rc.surviving_idx_.find(eid);
      if (it != rc.surviving_idx_.end()) {
        boundary.push_back(it->second);
      } else {
        dmu ^= c.mu().at(eid);
      }
    }
    if (boundary.empty()) continue;
    std::sort(boundary.begin(), boundary.end());
    rc.face_idx_.emplace(f.id, rc.faces_.size());
    rc.faces_.push_back(f);
    beta_psi_bits.push_back((f.beta ^ dmu) & 1);
    rc.face_boundaries_.push_back(boundary);
  }

  rc.beta_psi_ = BitVector(rc.faces_.size());
  for (std::size_t i = 0; i < beta_psi_bits.size(); ++i) {
    rc.beta_psi_.set(i, beta_psi_bits[i]);
  }

  rc.boundary_ = BitMatrix(rc.surviving_.size(), rc.faces_.size());
  for (std::size_t f = 0; f < rc.faces_.size(); ++f) {
    for (std::size_t e : rc.face_boundaries_[f]) {
      rc.boundary_.set(e, f, true);
    }
    rc.boundary_lookup_.emplace(rc.face_boundaries_[f], f);
  }
  return rc;
}

std::size_t RelativeComplex::surviving_index(const std::string& id) const {
  auto it = surviving_idx_.find(id);
  if (it == surviving_idx_.end()) {
    throw ComplexError(ComplexError::Kind::unknown_edge,
                       "edge '" + id + "' does not survive contraction");
  }
  return it->second;
}

std::size_t RelativeComplex::face_index(const std::string& id) const {
  auto it = face_idx_.find(id);
  if (it == face_idx_.end()) {
    throw ComplexError(ComplexError::Kind::unknown_face,
                       "unknown face '" + id + "'");
  }
  return it->second;
}

BitMatrix RelativeComplex::volume_coboundary() const {
  const std::vector<Volume>& volumes = base_.volumes();
  BitMatrix m(volumes.size(), faces_.size());
  for (std::size_t v = 0; v < volumes.size(); ++v) {
    for (const std::string& fid : volumes[v].faces) {
      // Faces removed by contraction drop out of the quotient.
      auto it = face_idx_.find(fid);
      if (it != face_idx_.end()) {
        m.set(v, it->second, true);
      }
    }
  }
  return m;
}

std::optional<std::size_t> RelativeComplex::find_face_by_boundary(
    const std::vector<std::size_t>& sorted_edges) const {
  auto it = boundary_lookup_.find(sorted_edges);
  if (it == boundary_lookup_.end()) return std::nullopt;
  return it->second;
}

int RelativeComplex::evaluate_beta_psi(const BitVector& chain) const {
  if (chain.size() != faces_.size()) {
    throw DimensionMismatch("evaluate_beta_psi: chain length mismatch");
  }
  return beta_psi_.dot(chain) ? 1 : 0;
}

}  // namespace coho
