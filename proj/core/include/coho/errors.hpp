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

#ifndef COHO_ERRORS_HPP
#define COHO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coho {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct BackendMismatch : Error {
  using Error::Error;
};

/// Raised by chain-complex construction and validation.
struct ComplexError : Error {
  enum class Kind {
    duplicate_edge,
    duplicate_face,
    unknown_edge,
    unknown_face,
    non_commuting_face,
    non_scalar_face,
    not_eigenstate,
    missing_mu,
    invalid_observable,
    volume_not_cycle,
  };
  Kind kind;
  ComplexError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

/// Gauge cochain touches an E0 edge or an unknown edge.
struct GaugeError : Error {
  using Error::Error;
};

/// The edgewise image of a face boundary is not the boundary of any face.
struct ImageNotAFace : Error {
  using Error::Error;
};

/// An input-group action was requested on an edge outside every pair.
struct UnpairedEdge : Error {
  using Error::Error;
};

struct CyclicTemporalOrder : Error {
  using Error::Error;
};

/// An enumeration guard (gauge count, branch depth, edge count) tripped.
struct GuardExceeded : Error {
  using Error::Error;
};

/// Text-format errors carry a 1-based position.
struct ParseError : Error {
  std::size_t line, column;
  ParseError(std::size_t l, std::size_t c, const std::string& what)
      : Error("line " + std::to_string(l) + ":" + std::to_string(c) + ": " +
              what),
        line(l),
        column(c) {}
};

struct UnresolvedReference : ParseError {
  using ParseError::ParseError;
};

struct DuplicateId : ParseError {
  using ParseError::ParseError;
};

}  // namespace coho

#endif  // COHO_ERRORS_HPP
