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

#ifndef COHO_SIMPLEX_HPP
#define COHO_SIMPLEX_HPP

#include <vector>

#include "coho/rational.hpp"

namespace coho {

/// Primal and dual optimum of max c.x s.t. A x <= b, x >= 0, in exact
/// rational arithmetic.
struct LpSolution {
  Rational value;
  std::vector<Rational> x;  // primal solution, size = columns of A
  std::vector<Rational> y;  // dual solution, size = rows of A
};

/// Dense tableau simplex with Bland's rule (anti-cycling). Requires
/// b >= 0, which makes the all-slack basis feasible. Throws Error on
/// unbounded or malformed problems.
LpSolution simplex_max(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c);

/// Exact feasibility + weak-duality check of a claimed optimal pair.
bool verify_lp_optimum(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c,
                       const LpSolution& sol);

}  // namespace coho

#endif  // COHO_SIMPLEX_HPP
