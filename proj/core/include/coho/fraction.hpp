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

#ifndef COHO_FRACTION_HPP
#define COHO_FRACTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "coho/boolean.hpp"
#include "coho/observable.hpp"
#include "coho/rational.hpp"
#include "coho/simplex.hpp"

namespace coho {

/// Per-context outcome distributions over a shared edge set. Outcome
/// words are indexed little-endian in the context's edge order.
struct EmpiricalModel {
  struct Context {
    std::string id;
    std::vector<std::size_t> edges;  // indices into the edge list
    std::vector<Rational> probs;     // size 2^edges.size()
  };

  std::vector<std::string> edges;
  std::vector<Context> contexts;
  /// Set when quantum probabilities could not be represented exactly
  /// within the rationalization error bound.
  bool approximate = false;

  /// Throws Error unless every distribution is nonnegative and sums to 1.
  void validate() const;
};

/// Born-rule joint distributions for the given contexts. Probabilities
/// are rationalized by continued fractions with denominators up to 2^20;
/// entries further than 1e-9 from an exact rational mark the model
/// approximate. Throws Error on a non-commuting context.
EmpiricalModel model_from_quantum(
    const StateVector& state,
    const std::vector<std::pair<std::string, Observable>>& edges,
    const std::vector<std::vector<std::string>>& contexts);

/// Non-contextual fraction with its LP optimality certificate. The
/// global-assignment weights live on all 2^|edges| assignments, indexed
/// little-endian by edge order.
struct NcfResult {
  Rational value;
  LpSolution lp;  // primal weights over assignments, dual over (context,outcome)
};

/// LP maximum of the total weight of a sub-normalized convex combination
/// of global assignments dominated by the model. Exact rational simplex.
/// Throws GuardExceeded when the edge count exceeds the guard.
NcfResult ncf(const EmpiricalModel& model, std::size_t guard_edges = 16);

/// 1 - ncf(model).
Rational cf(const EmpiricalModel& model, std::size_t guard_edges = 16);

/// Recomputes feasibility and duality of an ncf certificate exactly.
bool verify_ncf_certificate(const EmpiricalModel& model,
                            const NcfResult& result);

/// Best success fraction a deterministic global assignment can reach:
/// the output for input i is the parity of the assignment over that
/// input's context (plus output_offset[i] when given), compared against
/// target(i). Maximized over all 2^|edges| assignments.
Rational best_nchvm_success(
    const std::vector<std::string>& edges,
    const std::vector<std::vector<std::string>>& context_per_input,
    const BooleanFunction& target, const std::vector<int>& output_offset = {},
    std::size_t guard_edges = 16);

}  // namespace coho

#endif  // COHO_FRACTION_HPP
