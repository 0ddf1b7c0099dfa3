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

#include "coho/cocycle.hpp"

#include <algorithm>
#include <bit>

namespace coho {

std::string act_edge(const InputGroup& g, std::uint32_t q,
                     const std::string& edge) {
  for (const InputGroup::Pair& p : g.pairs) {
    if (p.e0 != edge && p.e1 != edge) continue;
    // Composition of the generator swaps selected by q.
    int flips = 0;
    for (std::size_t j = 0; j < g.m; ++j) {
      if (((q >> j) & 1) && p.srow.get(j)) flips ^= 1;
    }
    if (!flips) return edge;
    return edge == p.e0 ? p.e1 : p.e0;
  }
  throw UnpairedEdge("edge '" + edge + "' belongs to no input-group pair");
}

std::size_t act_face(const RelativeComplex& rc, const InputGroup& g,
                     std::uint32_t q, std::size_t face) {
  std::vector<std::size_t> image;
  for (std::size_t e : rc.face_boundary(face)) {
    const std::string& id = rc.surviving_edges()[e];
    image.push_back(rc.surviving_index(act_edge(g, q, id)));
  }
  std::sort(image.begin(), image.end());
  std::optional<std::size_t> hit = rc.find_face_by_boundary(image);
  if (!hit) {
    throw ImageNotAFace("image of face '" + rc.faces()[face].id +
                        "' under input " + std::to_string(q) +
                        " is not the boundary of any face");
  }
  return *hit;
}

BooleanFunction output_function(const RelativeComplex& rc,
                                const InputGroup& g,
                                const std::string& ref_face) {
  std::size_t ref = rc.face_index(ref_face);
  std::vector<std::uint8_t> table(std::size_t{1} << g.m);
  for (std::uint32_t q = 0; q < table.size(); ++q) {
    table[q] = static_cast<std::uint8_t>(
        rc.beta_psi_of(act_face(rc, g, q, ref)));
  }
  return BooleanFunction(g.m, std::move(table));
}

RelativeComplex gauge_apply(const RelativeComplex& rc,
                            const GaugeCochain& gamma) {
  const ChainComplex& base = rc.base();
  for (const auto& [id, bit] : gamma.gamma) {
    if (!rc.survives(id)) {
      throw GaugeError("gauge cochain touches non-surviving edge '" + id +
                       "'");
    }
    (void)bit;
  }

  std::vector<EdgeClass> edges = base.edges();
  for (EdgeClass& e : edges) {
    auto it = gamma.gamma.find(e.id);
    if (it != gamma.gamma.end() && (it->second & 1)) {
      e.rep = negated(e.rep);
    }
  }
  ChainComplex flipped =
      ChainComplex::build(std::move(edges), base.e0(), base.state(),
                          base.mu(), base.faces(), base.volumes());
  RelativeComplex out = RelativeComplex::contract(flipped);

  // The recomputed cocycle must be the old one shifted by d gamma.
  BitVector expected = rc.beta_psi();
  for (std::size_t f = 0; f < rc.faces().size(); ++f) {
    int dgamma = 0;
    for (std::size_t e : rc.face_boundary(f)) {
      auto it = gamma.gamma.find(rc.surviving_edges()[e]);
      if (it != gamma.gamma.end()) dgamma ^= it->second & 1;
    }
    if (dgamma) expected.flip(f);
  }
  if (out.beta_psi() != expected) {
    throw Error("gauge_apply: recomputed cocycle disagrees with d gamma");
  }
  return out;
}

std::set<BooleanFunction> output_class(const RelativeComplex& rc,
                                       const InputGroup& g,
                                       const std::string& ref_face,
                                       std::size_t guard) {
  std::size_t n = rc.surviving_edges().size();
  if (n > guard) {
    throw GuardExceeded("output_class: " + std::to_string(n) +
                        " surviving edges exceed the gauge enumeration "
                        "guard of " +
                        std::to_string(guard));
  }

  // The group action is label-wise, so the orbit of the reference face
  // is gauge-independent; precompute it once.
  std::size_t ref = rc.face_index(ref_face);
  std::size_t inputs = std::size_t{1} << g.m;
  std::vector<std::size_t> orbit(inputs);
  for (std::uint32_t q = 0; q < inputs; ++q) {
    orbit[q] = act_face(rc, g, q, ref);
  }

  // Gauges shift beta_psi by d gamma; enumerate gamma as bit masks over
  // the surviving edges and reuse each face's boundary mask.
  std::vector<std::uint64_t> boundary_mask(rc.faces().size(), 0);
  for (std::size_t f = 0; f < rc.faces().size(); ++f) {
    for (std::size_t e : rc.face_boundary(f)) {
      boundary_mask[f] |= std::uint64_t{1} << e;
    }
  }

  std::set<BooleanFunction> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint8_t> table(inputs);
    for (std::size_t q = 0; q < inputs; ++q) {
      std::size_t f = orbit[q];
      int dgamma = std::popcount(mask & boundary_mask[f]) & 1;
      table[q] = static_cast<std::uint8_t>(rc.beta_psi_of(f) ^ dgamma);
    }
    result.insert(BooleanFunction(g.m, std::move(table)));
  }
  return result;
}

}  // namespace coho
