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

#ifndef COHO_IO_HPP
#define COHO_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coho/cocycle.hpp"
#include "coho/complex.hpp"
#include "coho/fraction.hpp"
#include "coho/mbqc.hpp"

namespace coho {

// Line-oriented text format. Tokens are whitespace separated, '#'
// starts a comment, files use LF endings. Three document kinds:
//
//   SCENARIO <name>
//   BACKEND pauli|dense
//   QUBITS <n>
//   STATE AMPLITUDES <2^n entries "re,im">        # optional
//   EDGE <id> PAULI <signed-pauli-string>
//   EDGE <id> DENSE <path>
//   E0 <edge-id> [<mu-bit>]                       # mu from STATE unless given
//   FACE <id> : <edge-id>+
//   VOLUME <id> : <face-id>+
//   INPUTGROUP M <m> PAIR <site> <e0> <e1> ... SROW <site> <m bits> ...
//   REFFACE <face-id>
//
//   MBQC <name>
//   QUBITS <N> INPUTS <m> OUTPUTS <k>
//   STATE AMPLITUDES <...>
//   OBS <site> <0|1> PAULI <string> | DENSE <path>
//   MATRIX Z|T|S <rows of bits>
//
//   MODEL <name>
//   CONTEXT <id> : <edge-id>+
//   P <context-id> <outcome-bits> <p>/<q>

struct EdgeDecl {
  std::string id;
  std::optional<PhasedPauli> pauli;
  std::optional<DenseOperator> dense;
  std::string dense_path;  // as referenced from the document

  bool operator==(const EdgeDecl& o) const {
    return id == o.id && pauli == o.pauli && dense == o.dense;
  }
};

struct E0Decl {
  std::string id;
  std::optional<int> mu;
  bool operator==(const E0Decl&) const = default;
};

struct FaceDecl {
  std::string id;
  std::vector<std::string> edges;
  bool operator==(const FaceDecl&) const = default;
};

struct VolumeDecl {
  std::string id;
  std::vector<std::string> faces;
  bool operator==(const VolumeDecl&) const = default;
};

struct InputGroupDecl {
  struct Pair {
    std::size_t site = 0;  // 1-based in the file
    std::string e0, e1;
    bool operator==(const Pair&) const = default;
  };
  struct SRow {
    std::size_t site = 0;
    std::string bits;
    bool operator==(const SRow&) const = default;
  };
  std::size_t m = 0;
  std::vector<Pair> pairs;
  std::vector<SRow> srows;
  bool operator==(const InputGroupDecl&) const = default;
};

struct ScenarioDoc {
  std::string name;
  Backend backend = Backend::pauli;
  std::size_t qubits = 0;
  std::optional<std::vector<cplx>> amplitudes;
  std::vector<EdgeDecl> edges;
  std::vector<E0Decl> e0;
  std::vector<FaceDecl> faces;
  std::vector<VolumeDecl> volumes;
  std::optional<InputGroupDecl> group;
  std::optional<std::string> ref_face;
  bool operator==(const ScenarioDoc&) const = default;
};

struct ObsDecl {
  std::size_t site = 0;  // 1-based in the file
  int q = 0;
  std::optional<PhasedPauli> pauli;
  std::optional<DenseOperator> dense;
  std::string dense_path;

  bool operator==(const ObsDecl& o) const {
    return site == o.site && q == o.q && pauli == o.pauli && dense == o.dense;
  }
};

struct MbqcDoc {
  std::string name;
  std::size_t qubits = 0, inputs = 0, outputs = 0;
  std::vector<cplx> amplitudes;
  std::vector<ObsDecl> obs;
  std::vector<std::string> z_rows, t_rows, s_rows;
  bool operator==(const MbqcDoc&) const = default;
};

struct ModelDoc {
  struct ContextDecl {
    std::string id;
    std::vector<std::string> edges;
    bool operator==(const ContextDecl&) const = default;
  };
  struct ProbDecl {
    std::string context;
    std::string bits;
    Rational p;
    bool operator==(const ProbDecl&) const = default;
  };
  std::string name;
  std::vector<ContextDecl> contexts;
  std::vector<ProbDecl> probs;
  bool operator==(const ModelDoc&) const = default;
};

using Document = std::variant<ScenarioDoc, MbqcDoc, ModelDoc>;

/// Parses a document. Dense operator paths resolve against base_dir.
/// Throws ParseError (or the DuplicateId / UnresolvedReference
/// refinements), always with a line/column position.
Document parse(std::string_view text,
               const std::filesystem::path& base_dir = ".");

/// Canonical text form; parse(serialize(d)) is structurally equal to d
/// and serialization is idempotent. Dense declarations must carry paths.
std::string serialize(const Document& doc);

Document load_document(const std::filesystem::path& path);

/// Writes the document plus one auxiliary file per dense operator
/// declaration (next to the main file, at the declared relative paths).
void write_document(const Document& doc, const std::filesystem::path& path);

/// Dense operator text file: first line the dimension, then dim^2
/// whitespace-separated "re im" pairs in row-major order.
DenseOperator load_dense_operator(const std::filesystem::path& path);
void write_dense_operator(const DenseOperator& op,
                          const std::filesystem::path& path);

// Bridges between documents and the library types.
ChainComplex scenario_to_complex(const ScenarioDoc& doc);
std::optional<InputGroup> scenario_input_group(const ScenarioDoc& doc);
MbqcSpec mbqc_to_spec(const MbqcDoc& doc);
EmpiricalModel model_to_empirical(const ModelDoc& doc);

/// Document form of a built complex (for emission / round-trips). Dense
/// edges get deterministic paths "<name>_<edge>.op".
ScenarioDoc complex_to_scenario(
    const std::string& name, const ChainComplex& c,
    const std::optional<InputGroup>& group = std::nullopt,
    const std::optional<std::string>& ref_face = std::nullopt);

}  // namespace coho

#endif  // COHO_IO_HPP
