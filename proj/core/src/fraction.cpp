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

#include "coho/fraction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "coho/errors.hpp"

namespace coho {

namespace {

constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 20;
constexpr double kRationalizeTol = 1e-9;

// Outcome word of a global assignment restricted to a context.
std::size_t restrict_assignment(std::uint64_t assignment,
                                const std::vector<std::size_t>& edges) {
  std::size_t word = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((assignment >> edges[i]) & 1) word |= std::size_t{1} << i;
  }
  return word;
}

}  // namespace

void EmpiricalModel::validate() const {
  for (const Context& ctx : contexts) {
    if (ctx.probs.size() != (std::size_t{1} << ctx.edges.size())) {
      throw Error("EmpiricalModel: context '" + ctx.id +
                  "' has a wrong-sized distribution");
    }
    Rational total = 0;
    for (const Rational& p : ctx.probs) {
      if (p < 0) {
        throw Error("EmpiricalModel: negative probability in context '" +
                    ctx.id + "'");
      }
      total += p;
    }
    if (total != 1) {
      throw Error("EmpiricalModel: context '" + ctx.id +
                  "' does not sum to 1");
    }
    for (std::size_t e : ctx.edges) {
      if (e >= edges.size()) {
        throw Error("EmpiricalModel: context '" + ctx.id +
                    "' references an unknown edge");
      }
    }
  }
}

EmpiricalModel model_from_quantum(
    const StateVector& state,
    const std::vector<std::pair<std::string, Observable>>& edges,
    const std::vector<std::vector<std::string>>& contexts) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    index.emplace(edges[i].first, i);
  }

  EmpiricalModel model;
  for (const auto& [id, obs] : edges) {
    (void)obs;
    model.edges.push_back(id);
  }

  for (std::size_t c = 0; c < contexts.size(); ++c) {
    EmpiricalModel::Context ctx;
    ctx.id = "c" + std::to_string(c);
    std::vector<const Observable*> ops;
    for (const std::string& id : contexts[c]) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw Error("model_from_quantum: unknown edge '" + id + "'");
      }
      ctx.edges.push_back(it->second);
      ops.push_back(&edges[it->second].second);
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        if (!commutes(*ops[i], *ops[j])) {
          throw Error("model_from_quantum: context edges '" +
                      contexts[c][i] + "' and '" + contexts[c][j] +
                      "' do not commute");
        }
      }
    }

    std::size_t words = std::size_t{1} << ops.size();
    ctx.probs.resize(words);
    for (std::size_t word = 0; word < words; ++word) {
      // Joint Born probability via the commuting projector product.
      StateVector projected = state;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        StateVector image = apply(*ops[i], projected);
        projected = ((word >> i) & 1) ? projected.sub(image)
                                      : projected.add(image);
        projected = projected.scaled(0.5);
      }
      double p = projected.norm();
      double prob = p * p;
      Rational r = rationalize(prob, kMaxDenominator);
      if (std::abs(to_double(r) - prob) > kRationalizeTol) {
        model.approximate = true;
      }
      ctx.probs[word] = r;
    }
    // Absorb any rounding slack into the heaviest outcome so each
    // distribution sums to exactly 1.
    Rational total = 0;
    for (const Rational& p : ctx.probs) total += p;
    if (total != 1) {
      std::size_t heaviest =
          std::max_element(ctx.probs.begin(), ctx.probs.end()) -
          ctx.probs.begin();
      ctx.probs[heaviest] += Rational(1) - total;
      model.approximate = true;
    }
    model.contexts.push_back(std::move(ctx));
  }
  model.validate();
  return model;
}

NcfResult ncf(const EmpiricalModel& model, std::size_t guard_edges) {
  model.validate();
  if (model.edges.size() > guard_edges) {
    throw GuardExceeded("ncf: " + std::to_string(model.edges.size()) +
                        " edges exceed the enumeration guard of " +
                        std::to_string(guard_edges));
  }
  std::size_t assignments = std::size_t{1} << model.edges.size();

  // Constraints: for every context and outcome word, the total weight of
  // consistent assignments stays below the observed probability.
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const EmpiricalModel::Context& ctx : model.contexts) {
    std::size_t words = ctx.probs.size();
    std::vector<std::vector<Rational>> rows(
        words, std::vector<Rational>(assignments, 0));
    for (std::uint64_t g = 0; g < assignments; ++g) {
      rows[restrict_assignment(g, ctx.edges)][g] = 1;
    }
    for (std::size_t w = 0; w < words; ++w) {
      A.push_back(std::move(rows[w]));
      b.push_back(ctx.probs[w]);
    }
  }
  std::vector<Rational> c(assignments, 1);

  NcfResult result;
  result.lp = simplex_max(A, b, c);
  result.value = result.lp.value;
  return result;
}

Rational cf(const EmpiricalModel& model, std::size_t guard_edges) {
  return Rational(1) - ncf(model, guard_edges).value;
}

bool verify_ncf_certificate(const EmpiricalModel& model,
                            const NcfResult& result) {
  std::size_t assignments = std::size_t{1} << model.edges.size();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const EmpiricalModel::Context& ctx : model.contexts) {
    std::size_t words = ctx.probs.size();
    std::vector<std::vector<Rational>> rows(
        words, std::vector<Rational>(assignments, 0));
    for (std::uint64_t g = 0; g < assignments; ++g) {
      rows[restrict_assignment(g, ctx.edges)][g] = 1;
    }
    for (std::size_t w = 0; w < words; ++w) {
      A.push_back(std::move(rows[w]));
      b.push_back(ctx.probs[w]);
    }
  }
  std::vector<Rational> c(assignments, 1);
  return verify_lp_optimum(A, b, c, result.lp) &&
         result.value == result.lp.value;
}

Rational best_nchvm_success(
    const std::vector<std::string>& edges,
    const std::vector<std::vector<std::string>>& context_per_input,
    const BooleanFunction& target, const std::vector<int>& output_offset,
    std::size_t guard_edges) {
  if (edges.size() > guard_edges) {
    throw GuardExceeded("best_nchvm_success: edge count exceeds the guard");
  }
  if (context_per_input.size() != target.size()) {
    throw Error("best_nchvm_success: one context per input required");
  }
  if (!output_offset.empty() && output_offset.size() != target.size()) {
    throw Error("best_nchvm_success: offset size mismatch");
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    index.emplace(edges[i], i);
  }
  std::vector<std::uint64_t> masks;
  for (const auto& ctx : context_per_input) {
    std::uint64_t mask = 0;
    for (const std::string& id : ctx) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw Error("best_nchvm_success: unknown edge '" + id + "'");
      }
      mask |= std::uint64_t{1} << it->second;
    }
    masks.push_back(mask);
  }

  std::size_t best = 0;
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << edges.size()); ++g) {
    std::size_t hits = 0;
    for (std::size_t input = 0; input < target.size(); ++input) {
      int parity = std::popcount(g & masks[input]) & 1;
      if (!output_offset.empty()) parity ^= output_offset[input] & 1;
      if (parity == target(input)) ++hits;
    }
    best = std::max(best, hits);
  }
  return Rational(static_cast<long>(best)) /
         Rational(static_cast<long>(target.size()));
}

}  // namespace coho
