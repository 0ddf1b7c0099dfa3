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

#ifndef COHO_MBQC_HPP
#define COHO_MBQC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "coho/boolean.hpp"
#include "coho/gf2.hpp"
#include "coho/observable.hpp"

namespace coho {

/// An l2-MBQC: single-site adaptive measurements on a resource state
/// with mod-2 linear side processing o = Z s, q = T s + S i.
///
/// T_ij = 1 means the basis at site i depends on the outcome at site j,
/// so j must be measured first; the dependency digraph must be acyclic.
struct MbqcSpec {
  std::size_t n_sites = 0;    // N
  std::size_t n_inputs = 0;   // m
  std::size_t n_outputs = 0;  // k
  StateVector state;
  /// obs[i][q] is the observable measured at site i for basis bit q.
  std::vector<std::array<Observable, 2>> obs;
  BitMatrix z_matrix;  // k x N
  BitMatrix t_matrix;  // N x N
  BitMatrix s_matrix;  // N x m

  /// Throws on dimension defects, invalid observables, or cyclic T.
  void validate() const;
};

/// One simulated run. Outcome convention: the measured eigenvalue is
/// (-1)^s, so s = 0 records +1.
struct RunRecord {
  std::uint32_t input = 0;  // little-endian input bits
  BitVector q, s, o;
  std::uint64_t seed = 0;
};

/// Topological order of the measurement dependency digraph, with stable
/// tie-break by site index. Throws CyclicTemporalOrder.
std::vector<std::size_t> measurement_order(const BitMatrix& t_matrix);

/// Simulates one run with Born-rule sampling from a seeded mt19937_64.
RunRecord run(const MbqcSpec& spec, std::uint32_t input, std::uint64_t seed);

/// Exact branch enumeration over all outcome histories.
struct EvaluateResult {
  bool deterministic = false;
  /// Per output bit, the computed function (set when deterministic).
  std::vector<BooleanFunction> tables;
  /// Per input index, the weight of each k-bit output word.
  std::vector<std::map<std::uint32_t, double>> distribution;
};

/// Enumerates all outcome branches per input with exact amplitudes.
/// Reports a deterministic table iff for every input a single output
/// carries weight 1 within kNumTol. Throws GuardExceeded when the
/// branch depth exceeds the guard.
EvaluateResult evaluate(const MbqcSpec& spec, std::size_t guard = 20);

/// Average over all inputs of the weight on o = target(input).
/// Requires a single output bit and matching arity.
double success_probability(const MbqcSpec& spec,
                           const BooleanFunction& target);

}  // namespace coho

#endif  // COHO_MBQC_HPP
