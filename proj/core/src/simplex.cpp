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

#include "coho/simplex.hpp"

#include "coho/errors.hpp"

namespace coho {

LpSolution simplex_max(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c) {
  std::size_t m = A.size();
  std::size_t n = c.size();
  if (b.size() != m) {
    throw Error("simplex_max: rhs size mismatch");
  }
  for (const auto& row : A) {
    if (row.size() != n) {
      throw Error("simplex_max: ragged constraint matrix");
    }
  }
  for (const Rational& v : b) {
    if (v < 0) {
      throw Error("simplex_max: negative rhs; all-slack basis infeasible");
    }
  }

  // Tableau layout: columns [0, n) structural, [n, n+m) slack, column
  // n+m the rhs. Row m holds the reduced costs and the negated value.
  std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = A[i][j];
    }
    t[i][n + i] = 1;
    t[i][cols - 1] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    t[m][j] = c[j];
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = n + i;
  }

  for (;;) {
    // Bland: entering variable = lowest index with positive reduced cost.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols - 1) break;  // optimal

    // Ratio test; ties broken by the lowest basis index (Bland).
    std::size_t leave = m;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      throw Error("simplex_max: objective unbounded above");
    }

    // Pivot on (leave, enter).
    Rational pivot = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) {
      t[leave][j] /= pivot;
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        t[i][j] -= factor * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) {
      sol.x[basis[i]] = t[i][cols - 1];
    }
  }
  // Dual values sit in the objective row under the slack columns.
  sol.y.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    sol.y[i] = -t[m][n + i];
  }
  sol.value = -t[m][cols - 1];
  return sol;
}

bool verify_lp_optimum(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c,
                       const LpSolution& sol) {
  std::size_t m = A.size(), n = c.size();
  if (sol.x.size() != n || sol.y.size() != m) return false;
  // Primal feasibility.
  Rational primal = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.x[j] < 0) return false;
    primal += c[j] * sol.x[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      lhs += A[i][j] * sol.x[j];
    }
    if (lhs > b[i]) return false;
  }
  // Dual feasibility.
  Rational dual = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sol.y[i] < 0) return false;
    dual += b[i] * sol.y[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < m; ++i) {
      lhs += A[i][j] * sol.y[i];
    }
    if (lhs < c[j]) return false;
  }
  // Matching objectives certify optimality by weak duality.
  return primal == dual && primal == sol.value;
}

}  // namespace coho
