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

#ifndef COHO_COMPLEX_HPP
#define COHO_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coho/errors.hpp"
#include "coho/gf2.hpp"
#include "coho/observable.hpp"

namespace coho {

/// An edge of the complex: the equivalence class {+-T} of an observable,
/// stored through one signed representative.
struct EdgeClass {
  std::string id;
  Observable rep;
};

/// A face: a context of pairwise commuting edge representatives whose
/// product is +-I. beta records the sign exponent of that product and is
/// always computed, never supplied.
struct Face {
  std::string id;
  std::vector<std::string> edges;  // distinct edge ids
  int beta = 0;
};

struct Volume {
  std::string id;
  std::vector<std::string> faces;
};

struct BuildOptions {
  std::size_t max_dense_dim = kDefaultMaxDenseDim;
};

/// The chain complex C(E) of a measurement scenario, optionally carrying
/// a distinguished edge subset E0 with eigenvalue assignment mu and a
/// resource state. Immutable once built.
class ChainComplex {
 public:
  /// Validates and builds. mu for E0 edges is computed from the state
  /// when one is given; explicit mu entries are checked against it.
  /// Throws ComplexError on any defect.
  static ChainComplex build(std::vector<EdgeClass> edges,
                            std::vector<std::string> e0,
                            std::optional<StateVector> state,
                            std::map<std::string, int> mu,
                            std::vector<Face> faces,
                            std::vector<Volume> volumes = {},
                            const BuildOptions& options = {});

  const std::vector<EdgeClass>& edges() const { return edges_; }
  const std::vector<std::string>& e0() const { return e0_; }
  const std::map<std::string, int>& mu() const { return mu_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Volume>& volumes() const { return volumes_; }
  const std::optional<StateVector>& state() const { return state_; }

  std::size_t edge_index(const std::string& id) const;
  std::size_t face_index(const std::string& id) const;
  bool is_e0(const std::string& id) const { return mu_.count(id) != 0; }

  /// Full boundary matrix of C(E): edges x faces, column f marking the
  /// edges of face f.
  BitMatrix boundary_matrix() const;
  /// Face incidence of the volumes: faces x volumes.
  BitMatrix volume_boundary_matrix() const;

  /// beta as a vector over faces, in face order.
  BitVector beta() const;

 private:
  ChainComplex() = default;

  std::vector<EdgeClass> edges_;
  std::vector<std::string> e0_;
  std::map<std::string, int> mu_;
  std::vector<Face> faces_;
  std::vector<Volume> volumes_;
  std::optional<StateVector> state_;
  std::map<std::string, std::size_t> edge_idx_;
  std::map<std::string, std::size_t> face_idx_;
};

/// The relative complex C(E, E0): E0 edges contracted away, faces whose
/// boundary sat entirely inside E0 removed, and beta_psi = beta + d mu.
class RelativeComplex {
 public:
  static RelativeComplex contract(const ChainComplex& c);

  const ChainComplex& base() const { return base_; }

  /// Surviving edges (E \ E0), in base edge order.
  const std::vector<std::string>& surviving_edges() const { return surviving_; }
  std::size_t surviving_index(const std::string& id) const;
  bool survives(const std::string& id) const {
    return surviving_idx_.count(id) != 0;
  }

  /// Faces that survive contraction; ids and full edge sets retained.
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_index(const std::string& id) const;

  /// beta_psi over surviving faces, in face order.
  const BitVector& beta_psi() const { return beta_psi_; }
  int beta_psi_of(std::size_t face) const { return beta_psi_.get(face); }

  /// Relative boundary matrix: surviving edges x faces.
  const BitMatrix& boundary_matrix() const { return boundary_; }
  /// Coboundary d on 1-cochains: faces x surviving edges (the transpose
  /// of the relative boundary matrix).
  BitMatrix coboundary() const { return boundary_.transposed(); }
  /// Coboundary into volumes: volumes x faces (empty when no volumes).
  BitMatrix volume_coboundary() const;

  /// Relative boundary of one face as surviving-edge indices, sorted.
  const std::vector<std::size_t>& face_boundary(std::size_t face) const {
    return face_boundaries_[face];
  }
  /// Face with the given relative boundary, if any.
  std::optional<std::size_t> find_face_by_boundary(
      const std::vector<std::size_t>& sorted_edges) const;

  /// beta_psi evaluated on a 2-chain given as a face-indicator vector.
  int evaluate_beta_psi(const BitVector& chain) const;

 private:
  RelativeComplex() = default;

  ChainComplex base_;
  std::vector<std::string> surviving_;
  std::map<std::string, std::size_t> surviving_idx_;
  std::vector<Face> faces_;
  std::map<std::string, std::size_t> face_idx_;
  std::vector<std::vector<std::size_t>> face_boundaries_;
  std::map<std::vector<std::size_t>, std::size_t> boundary_lookup_;
  BitVector beta_psi_;
  BitMatrix boundary_;
};

}  // namespace coho

#endif  // COHO_COMPLEX_HPP
