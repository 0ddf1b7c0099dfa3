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

#ifndef COHO_COCYCLE_HPP
#define COHO_COCYCLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coho/boolean.hpp"
#include "coho/complex.hpp"

namespace coho {

/// The input group Q = Z_2^m acting on measurement edges. Generator j
/// swaps the pair (e0, e1) at site i exactly when bit j of the site's
/// S-row is set. Group elements are m-bit words, bit j-1 = generator j.
struct InputGroup {
  struct Pair {
    std::size_t site = 0;  // 0-based
    std::string e0, e1;
    BitVector srow;  // m bits
  };
  std::size_t m = 0;
  std::vector<Pair> pairs;
};

/// Image of an edge under the group element q. Throws UnpairedEdge when
/// the edge belongs to no declared pair.
std::string act_edge(const InputGroup& g, std::uint32_t q,
                     const std::string& edge);

/// Image of a face: the face whose relative boundary is the edgewise
/// image of the given face's boundary. Throws ImageNotAFace when the
/// complex has no such face.
std::size_t act_face(const RelativeComplex& rc, const InputGroup& g,
                     std::uint32_t q, std::size_t face);

/// Output function of a temporally flat MBQC from the cocycle route:
/// table[i] = beta_psi(i(f_ref)) for every input i.
BooleanFunction output_function(const RelativeComplex& rc,
                                const InputGroup& g,
                                const std::string& ref_face);

/// A sign-flip cochain on the surviving edges only.
struct GaugeCochain {
  std::map<std::string, int> gamma;
};

/// Flips the representatives where gamma = 1 and rebuilds. The new
/// beta_psi equals the old one plus d gamma (asserted internally).
/// Throws GaugeError when gamma touches an E0 or unknown edge.
RelativeComplex gauge_apply(const RelativeComplex& rc,
                            const GaugeCochain& gamma);

/// The set of output functions over all 2^|surviving edges| gauges.
/// Throws GuardExceeded beyond the guard.
std::set<BooleanFunction> output_class(const RelativeComplex& rc,
                                       const InputGroup& g,
                                       const std::string& ref_face,
                                       std::size_t guard = 20);

}  // namespace coho

#endif  // COHO_COCYCLE_HPP
