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

#include "coho/mbqc.hpp"

#include <cmath>
#include <random>

#include "coho/errors.hpp"

namespace coho {

namespace {

// 2x2 dense form of a single-site observable.
DenseOperator site_operator(const Observable& obs) {
  if (obs.is_pauli()) {
    return to_dense(obs.pauli());
  }
  return obs.dense();
}

// Basis bit for site i given the outcomes fixed so far and the input.
int basis_bit(const MbqcSpec& spec, std::size_t site, const BitVector& s,
              std::uint32_t input) {
  int q = 0;
  for (std::size_t j = 0; j < spec.n_sites; ++j) {
    if (spec.t_matrix.get(site, j) && s.get(j)) q ^= 1;
  }
  for (std::size_t j = 0; j < spec.n_inputs; ++j) {
    if (spec.s_matrix.get(site, j) && ((input >> j) & 1)) q ^= 1;
  }
  return q;
}

BitVector output_bits(const MbqcSpec& spec, const BitVector& s) {
  return spec.z_matrix.mul(s);
}

std::uint32_t to_index(const BitVector& bits) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits.get(i)) v |= std::uint32_t{1} << i;
  }
  return v;
}

void enumerate_branches(const MbqcSpec& spec,
                        const std::vector<std::size_t>& order,
                        std::uint32_t input, std::size_t pos,
                        const StateVector& psi, double weight, BitVector& s,
                        std::map<std::uint32_t, double>& accum) {
  if (weight <= 1e-15) return;
  if (pos == order.size()) {
    accum[to_index(output_bits(spec, s))] += weight;
    return;
  }
  std::size_t site = order[pos];
  int q = basis_bit(spec, site, s, input);
  DenseOperator op = site_operator(spec.obs[site][q]);
  StateVector image = apply_single_site(op, site, spec.n_sites, psi);
  for (int outcome = 0; outcome < 2; ++outcome) {
    // Projection (psi +- O psi) / 2 onto the (-1)^outcome eigenspace.
    StateVector projected =
        (outcome == 0 ? psi.add(image) : psi.sub(image)).scaled(0.5);
    double p = projected.norm();
    double prob = p * p;
    if (prob <= 1e-15) continue;
    s.set(site, outcome == 1);
    enumerate_branches(spec, order, input, pos + 1,
                       projected.scaled(1.0 / p), weight * prob, s, accum);
    s.set(site, false);
  }
}

}  // namespace

void MbqcSpec::validate() const {
  if (obs.size() != n_sites) {
    throw Error("MbqcSpec: observable pair count must equal site count");
  }
  if (state.dim() != (std::size_t{1} << n_sites)) {
    throw Error("MbqcSpec: state dimension must be 2^N");
  }
  if (std::abs(state.norm() - 1.0) > 1e-12) {
    throw Error("MbqcSpec: state is not normalized");
  }
  if (z_matrix.rows() != n_outputs || z_matrix.cols() != n_sites ||
      t_matrix.rows() != n_sites || t_matrix.cols() != n_sites ||
      s_matrix.rows() != n_sites || s_matrix.cols() != n_inputs) {
    throw Error("MbqcSpec: side-processing matrix shape mismatch");
  }
  for (std::size_t i = 0; i < n_sites; ++i) {
    for (int q = 0; q < 2; ++q) {
      const Observable& o = obs[i][q];
      if (o.dim() != 2) {
        throw Error("MbqcSpec: per-site observables must act on one qubit");
      }
      if (auto defect = observable_defect(o)) {
        throw Error("MbqcSpec: site " + std::to_string(i + 1) + ": " +
                    *defect);
      }
    }
  }
  measurement_order(t_matrix);  // throws on cycles
}

std::vector<std::size_t> measurement_order(const BitMatrix& t_matrix) {
  std::size_t n = t_matrix.rows();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t_matrix.get(i, j)) ++indegree[i];
    }
  }
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    // Stable tie-break: the smallest ready site goes next.
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i] && indegree[i] == 0) {
        pick = i;
        break;
      }
    }
    if (pick == n) {
      throw CyclicTemporalOrder(
          "temporal-order matrix has a dependency cycle");
    }
    placed[pick] = true;
    order.push_back(pick);
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i] && t_matrix.get(i, pick)) --indegree[i];
    }
  }
  return order;
}

RunRecord run(const MbqcSpec& spec, std::uint32_t input, std::uint64_t seed) {
  std::vector<std::size_t> order = measurement_order(spec.t_matrix);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  StateVector psi = spec.state;
  BitVector s(spec.n_sites), q(spec.n_sites);
  for (std::size_t site : order) {
    int qi = basis_bit(spec, site, s, input);
    q.set(site, qi == 1);
    DenseOperator op = site_operator(spec.obs[site][qi]);
    StateVector image = apply_single_site(op, site, spec.n_sites, psi);
    StateVector plus = psi.add(image).scaled(0.5);
    double p_plus = plus.norm() * plus.norm();
    int outcome = uniform(rng) < p_plus ? 0 : 1;
    StateVector projected =
        outcome == 0 ? plus : psi.sub(image).scaled(0.5);
    s.set(site, outcome == 1);
    psi = projected.normalized();
  }
  RunRecord record;
  record.input = input;
  record.q = q;
  record.s = s;
  record.o = output_bits(spec, s);
  record.seed = seed;
  return record;
}

EvaluateResult evaluate(const MbqcSpec& spec, std::size_t guard) {
  if (spec.n_sites > guard) {
    throw GuardExceeded("evaluate: branch depth " +
                        std::to_string(spec.n_sites) +
                        " exceeds the guard of " + std::to_string(guard));
  }
  std::vector<std::size_t> order = measurement_order(spec.t_matrix);
  std::size_t inputs = std::size_t{1} << spec.n_inputs;

  EvaluateResult result;
  result.distribution.resize(inputs);
  for (std::uint32_t input = 0; input < inputs; ++input) {
    BitVector s(spec.n_sites);
    enumerate_branches(spec, order, input, 0, spec.state, 1.0, s,
                       result.distribution[input]);
  }

  result.deterministic = true;
  std::vector<std::uint32_t> winner(inputs, 0);
  for (std::uint32_t input = 0; input < inputs; ++input) {
    bool found = false;
    for (const auto& [o, w] : result.distribution[input]) {
      if (std::abs(w - 1.0) <= kNumTol) {
        winner[input] = o;
        found = true;
      } else if (w > kNumTol) {
        result.deterministic = false;
      }
    }
    if (!found) result.deterministic = false;
  }
  if (result.deterministic) {
    for (std::size_t bit = 0; bit < spec.n_outputs; ++bit) {
      std::vector<std::uint8_t> table(inputs);
      for (std::uint32_t input = 0; input < inputs; ++input) {
        table[input] = static_cast<std::uint8_t>((winner[input] >> bit) & 1);
      }
      result.tables.emplace_back(spec.n_inputs, std::move(table));
    }
  }
  return result;
}

double success_probability(const MbqcSpec& spec,
                           const BooleanFunction& target) {
  if (spec.n_outputs != 1) {
    throw Error("success_probability: spec must have one output bit");
  }
  if (target.m != spec.n_inputs) {
    throw Error("success_probability: target arity mismatch");
  }
  EvaluateResult result = evaluate(spec);
  double total = 0;
  for (std::uint32_t input = 0; input < target.size(); ++input) {
    auto it = result.distribution[input].find(target(input));
    if (it != result.distribution[input].end()) total += it->second;
  }
  return total / static_cast<double>(target.size());
}

}  // namespace coho
