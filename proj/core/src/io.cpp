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

#include "coho/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace coho {

namespace {

struct Token {
  std::string text;
  std::size_t line, col;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    Line line;
    line.number = line_no;
    std::size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r' && raw[i] != '#' && raw[i] != '\v' &&
             raw[i] != '\f') {
        ++i;
      }
      line.tokens.push_back(
          Token{std::string(raw.substr(start, i - start)), line_no, start + 1});
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw ParseError(at.line, at.col, message);
}

[[noreturn]] void fail_line(const Line& line, const std::string& message) {
  throw ParseError(line.number, 1, message);
}

double parse_double(const Token& t, std::string_view text) {
  try {
    std::size_t used = 0;
    double v = std::stod(std::string(text), &used);
    if (used != text.size()) {
      fail(t, "trailing characters in number '" + std::string(text) + "'");
    }
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(t, "bad number '" + std::string(text) + "'");
  }
}

std::size_t parse_size(const Token& t) {
  std::size_t v = 0;
  for (char c : t.text) {
    if (c < '0' || c > '9') {
      fail(t, "expected a nonnegative integer, got '" + t.text + "'");
    }
    if (v > (SIZE_MAX - 9) / 10) {
      fail(t, "integer overflow in '" + t.text + "'");
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (t.text.empty()) {
    fail(t, "expected a nonnegative integer");
  }
  return v;
}

cplx parse_amplitude(const Token& t) {
  std::size_t comma = t.text.find(',');
  if (comma == std::string::npos) {
    fail(t, "amplitude entries look like re,im");
  }
  double re = parse_double(t, std::string_view(t.text).substr(0, comma));
  double im = parse_double(t, std::string_view(t.text).substr(comma + 1));
  return cplx{re, im};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_amplitude(const cplx& v) {
  return format_double(v.real()) + "," + format_double(v.imag());
}

PhasedPauli parse_pauli_token(const Token& t) {
  try {
    return PhasedPauli::parse(t.text);
  } catch (const std::exception& e) {
    fail(t, std::string("bad Pauli string: ") + e.what());
  }
}

std::vector<cplx> parse_state_line(const Line& line, std::size_t dim) {
  if (line.tokens.size() < 2 || line.tokens[1].text != "AMPLITUDES") {
    fail_line(line, "STATE must be followed by AMPLITUDES");
  }
  if (line.tokens.size() != 2 + dim) {
    fail_line(line, "STATE AMPLITUDES needs exactly " + std::to_string(dim) +
                        " entries");
  }
  std::vector<cplx> amps;
  for (std::size_t i = 2; i < line.tokens.size(); ++i) {
    amps.push_back(parse_amplitude(line.tokens[i]));
  }
  return amps;
}

ScenarioDoc parse_scenario(const std::vector<Line>& lines,
                           const std::filesystem::path& base_dir) {
  ScenarioDoc doc;
  doc.name = lines[0].tokens[1].text;
  bool saw_backend = false, saw_qubits = false;
  std::set<std::string> edge_ids, face_ids, volume_ids, e0_ids;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& kw = line.tokens[0].text;
    if (kw == "BACKEND") {
      if (line.tokens.size() != 2 ||
          (line.tokens[1].text != "pauli" && line.tokens[1].text != "dense")) {
        fail_line(line, "BACKEND must be pauli or dense");
      }
      doc.backend =
          line.tokens[1].text == "pauli" ? Backend::pauli : Backend::dense;
      saw_backend = true;
    } else if (kw == "QUBITS") {
      if (line.tokens.size() != 2) fail_line(line, "QUBITS takes one number");
      doc.qubits = parse_size(line.tokens[1]);
      saw_qubits = true;
    } else if (kw == "STATE") {
      if (!saw_qubits) fail_line(line, "STATE must come after QUBITS");
      doc.amplitudes =
          parse_state_line(line, std::size_t{1} << doc.qubits);
    } else if (kw == "EDGE") {
      if (line.tokens.size() != 4) {
        fail_line(line, "EDGE takes: <id> PAULI <word> | <id> DENSE <path>");
      }
      EdgeDecl e;
      e.id = line.tokens[1].text;
      if (!edge_ids.insert(e.id).second) {
        throw DuplicateId(line.number, line.tokens[1].col,
                          "duplicate edge id '" + e.id + "'");
      }
      if (line.tokens[2].text == "PAULI") {
        e.pauli = parse_pauli_token(line.tokens[3]);
      } else if (line.tokens[2].text == "DENSE") {
        e.dense_path = line.tokens[3].text;
        try {
          e.dense = load_dense_operator(base_dir / e.dense_path);
        } catch (const std::exception& ex) {
          fail(line.tokens[3], std::string("cannot load dense operator: ") +
                                   ex.what());
        }
      } else {
        fail(line.tokens[2], "expected PAULI or DENSE");
      }
      doc.edges.push_back(std::move(e));
    } else if (kw == "E0") {
      if (line.tokens.size() != 2 && line.tokens.size() != 3) {
        fail_line(line, "E0 takes an edge id and an optional mu bit");
      }
      E0Decl d;
      d.id = line.tokens[1].text;
      if (!edge_ids.count(d.id)) {
        throw UnresolvedReference(line.number, line.tokens[1].col,
                                  "E0 references undeclared edge '" + d.id +
                                      "'");
      }
      if (!e0_ids.insert(d.id).second) {
        throw DuplicateId(line.number, line.tokens[1].col,
                          "edge '" + d.id + "' listed in E0 twice");
      }
      if (line.tokens.size() == 3) {
        const std::string& bit = line.tokens[2].text;
        if (bit != "0" && bit != "1") {
          fail(line.tokens[2], "mu bit must be 0 or 1");
        }
        d.mu = bit == "1" ? 1 : 0;
      }
      doc.e0.push_back(std::move(d));
    } else if (kw == "FACE" || kw == "VOLUME") {
      if (line.tokens.size() < 4 || line.tokens[2].text != ":") {
        fail_line(line, kw + " takes: <id> : <ref>+");
      }
      std::string id = line.tokens[1].text;
      std::vector<std::string> refs;
      for (std::size_t i = 3; i < line.tokens.size(); ++i) {
        refs.push_back(line.tokens[i].text);
      }
      if (kw == "FACE") {
        if (!face_ids.insert(id).second) {
          throw DuplicateId(line.number, line.tokens[1].col,
                            "duplicate face id '" + id + "'");
        }
        for (std::size_t i = 3; i < line.tokens.size(); ++i) {
          if (!edge_ids.count(line.tokens[i].text)) {
            throw UnresolvedReference(
                line.number, line.tokens[i].col,
                "face '" + id + "' references undeclared edge '" +
                    line.tokens[i].text + "'");
          }
        }
        doc.faces.push_back(FaceDecl{std::move(id), std::move(refs)});
      } else {
        if (!volume_ids.insert(id).second) {
          throw DuplicateId(line.number, line.tokens[1].col,
                            "duplicate volume id '" + id + "'");
        }
        for (std::size_t i = 3; i < line.tokens.size(); ++i) {
          if (!face_ids.count(line.tokens[i].text)) {
            throw UnresolvedReference(
                line.number, line.tokens[i].col,
                "volume '" + id + "' references undeclared face '" +
                    line.tokens[i].text + "'");
          }
        }
        doc.volumes.push_back(VolumeDecl{std::move(id), std::move(refs)});
      }
    } else if (kw == "INPUTGROUP") {
      InputGroupDecl g;
      std::size_t i = 1;
      if (i + 1 >= line.tokens.size() || line.tokens[i].text != "M") {
        fail_line(line, "INPUTGROUP starts with M <m>");
      }
      g.m = parse_size(line.tokens[i + 1]);
      i += 2;
      while (i < line.tokens.size()) {
        const Token& t = line.tokens[i];
        if (t.text == "PAIR") {
          if (i + 3 >= line.tokens.size()) {
            fail(t, "PAIR takes <site> <edge0> <edge1>");
          }
          InputGroupDecl::Pair p;
          p.site = parse_size(line.tokens[i + 1]);
          p.e0 = line.tokens[i + 2].text;
          p.e1 = line.tokens[i + 3].text;
          for (const std::string& id : {p.e0, p.e1}) {
            if (!edge_ids.count(id)) {
              throw UnresolvedReference(line.number, t.col,
                                        "PAIR references undeclared edge '" +
                                            id + "'");
            }
          }
          g.pairs.push_back(std::move(p));
          i += 4;
        } else if (t.text == "SROW") {
          if (i + 2 >= line.tokens.size()) {
            fail(t, "SROW takes <site> <bits>");
          }
          InputGroupDecl::SRow row;
          row.site = parse_size(line.tokens[i + 1]);
          row.bits = line.tokens[i + 2].text;
          if (row.bits.size() != g.m ||
              row.bits.find_first_not_of("01") != std::string::npos) {
            fail(line.tokens[i + 2],
                 "SROW bits must be " + std::to_string(g.m) + " of 0/1");
          }
          g.srows.push_back(std::move(row));
          i += 3;
        } else {
          fail(t, "expected PAIR or SROW");
        }
      }
      doc.group = std::move(g);
    } else if (kw == "REFFACE") {
      if (line.tokens.size() != 2) fail_line(line, "REFFACE takes a face id");
      if (!face_ids.count(line.tokens[1].text)) {
        throw UnresolvedReference(line.number, line.tokens[1].col,
                                  "REFFACE references undeclared face '" +
                                      line.tokens[1].text + "'");
      }
      doc.ref_face = line.tokens[1].text;
    } else {
      fail(line.tokens[0], "unknown directive '" + kw + "' in SCENARIO");
    }
  }
  if (!saw_backend) {
    fail_line(lines[0], "SCENARIO needs a BACKEND line");
  }
  if (!saw_qubits) {
    fail_line(lines[0], "SCENARIO needs a QUBITS line");
  }
  return doc;
}

MbqcDoc parse_mbqc(const std::vector<Line>& lines,
                   const std::filesystem::path& base_dir) {
  MbqcDoc doc;
  doc.name = lines[0].tokens[1].text;
  bool saw_shape = false, saw_state = false;
  std::set<std::pair<std::size_t, int>> obs_seen;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& kw = line.tokens[0].text;
    if (kw == "QUBITS") {
      if (line.tokens.size() != 6 || line.tokens[2].text != "INPUTS" ||
          line.tokens[4].text != "OUTPUTS") {
        fail_line(line, "expected QUBITS <N> INPUTS <m> OUTPUTS <k>");
      }
      doc.qubits = parse_size(line.tokens[1]);
      doc.inputs = parse_size(line.tokens[3]);
      doc.outputs = parse_size(line.tokens[5]);
      saw_shape = true;
    } else if (kw == "STATE") {
      if (!saw_shape) fail_line(line, "STATE must come after QUBITS");
      doc.amplitudes = parse_state_line(line, std::size_t{1} << doc.qubits);
      saw_state = true;
    } else if (kw == "OBS") {
      if (line.tokens.size() != 5) {
        fail_line(line, "OBS takes: <site> <0|1> PAULI <word> | DENSE <path>");
      }
      ObsDecl d;
      d.site = parse_size(line.tokens[1]);
      if (line.tokens[2].text != "0" && line.tokens[2].text != "1") {
        fail(line.tokens[2], "basis bit must be 0 or 1");
      }
      d.q = line.tokens[2].text == "1" ? 1 : 0;
      if (!obs_seen.insert({d.site, d.q}).second) {
        throw DuplicateId(line.number, line.tokens[1].col,
                          "duplicate OBS declaration for site " +
                              std::to_string(d.site));
      }
      if (line.tokens[3].text == "PAULI") {
        d.pauli = parse_pauli_token(line.tokens[4]);
      } else if (line.tokens[3].text == "DENSE") {
        d.dense_path = line.tokens[4].text;
        try {
          d.dense = load_dense_operator(base_dir / d.dense_path);
        } catch (const std::exception& ex) {
          fail(line.tokens[4], std::string("cannot load dense operator: ") +
                                   ex.what());
        }
      } else {
        fail(line.tokens[3], "expected PAULI or DENSE");
      }
      doc.obs.push_back(std::move(d));
    } else if (kw == "MATRIX") {
      if (line.tokens.size() < 2) fail_line(line, "MATRIX takes Z, T or S");
      std::vector<std::string>* rows = nullptr;
      if (line.tokens[1].text == "Z") {
        rows = &doc.z_rows;
      } else if (line.tokens[1].text == "T") {
        rows = &doc.t_rows;
      } else if (line.tokens[1].text == "S") {
        rows = &doc.s_rows;
      } else {
        fail(line.tokens[1], "MATRIX takes Z, T or S");
      }
      if (!rows->empty()) {
        throw DuplicateId(line.number, line.tokens[1].col,
                          "MATRIX " + line.tokens[1].text + " given twice");
      }
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        if (line.tokens[i].text.find_first_not_of("01") !=
            std::string::npos) {
          fail(line.tokens[i], "matrix rows are strings of 0/1");
        }
        rows->push_back(line.tokens[i].text);
      }
    } else {
      fail(line.tokens[0], "unknown directive '" + kw + "' in MBQC");
    }
  }
  if (!saw_shape) fail_line(lines[0], "MBQC needs a QUBITS line");
  if (!saw_state) fail_line(lines[0], "MBQC needs a STATE line");
  return doc;
}

ModelDoc parse_model(const std::vector<Line>& lines) {
  ModelDoc doc;
  doc.name = lines[0].tokens[1].text;
  std::map<std::string, std::size_t> context_arity;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& kw = line.tokens[0].text;
    if (kw == "CONTEXT") {
      if (line.tokens.size() < 4 || line.tokens[2].text != ":") {
        fail_line(line, "CONTEXT takes: <id> : <edge-id>+");
      }
      ModelDoc::ContextDecl ctx;
      ctx.id = line.tokens[1].text;
      if (context_arity.count(ctx.id)) {
        throw DuplicateId(line.number, line.tokens[1].col,
                          "duplicate context id '" + ctx.id + "'");
      }
      std::set<std::string> seen;
      for (std::size_t i = 3; i < line.tokens.size(); ++i) {
        if (!seen.insert(line.tokens[i].text).second) {
          throw DuplicateId(line.number, line.tokens[i].col,
                            "context '" + ctx.id + "' repeats edge '" +
                                line.tokens[i].text + "'");
        }
        ctx.edges.push_back(line.tokens[i].text);
      }
      context_arity[ctx.id] = ctx.edges.size();
      doc.contexts.push_back(std::move(ctx));
    } else if (kw == "P") {
      if (line.tokens.size() != 4) {
        fail_line(line, "P takes: <context-id> <outcome-bits> <p>/<q>");
      }
      ModelDoc::ProbDecl p;
      p.context = line.tokens[1].text;
      auto it = context_arity.find(p.context);
      if (it == context_arity.end()) {
        throw UnresolvedReference(line.number, line.tokens[1].col,
                                  "P references undeclared context '" +
                                      p.context + "'");
      }
      p.bits = line.tokens[2].text;
      if (p.bits.size() != it->second ||
          p.bits.find_first_not_of("01") != std::string::npos) {
        fail(line.tokens[2], "outcome must be " + std::to_string(it->second) +
                                 " bits of 0/1");
      }
      try {
        p.p = parse_rational(line.tokens[3].text);
      } catch (const std::exception& ex) {
        fail(line.tokens[3], ex.what());
      }
      if (p.p < 0 || p.p > 1) {
        fail(line.tokens[3], "probability out of [0, 1]");
      }
      doc.probs.push_back(std::move(p));
    } else {
      fail(line.tokens[0], "unknown directive '" + kw + "' in MODEL");
    }
  }
  return doc;
}

}  // namespace

Document parse(std::string_view text, const std::filesystem::path& base_dir) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) {
    throw ParseError(1, 1, "empty document");
  }
  const Line& head = lines[0];
  if (head.tokens.size() != 2) {
    fail_line(head, "document starts with SCENARIO|MBQC|MODEL <name>");
  }
  const std::string& kind = head.tokens[0].text;
  if (kind == "SCENARIO") {
    return parse_scenario(lines, base_dir);
  }
  if (kind == "MBQC") {
    return parse_mbqc(lines, base_dir);
  }
  if (kind == "MODEL") {
    return parse_model(lines);
  }
  fail(head.tokens[0], "expected SCENARIO, MBQC or MODEL");
}

namespace {

void serialize_state(std::ostringstream& out,
                     const std::vector<cplx>& amplitudes) {
  out << "STATE AMPLITUDES";
  for (const cplx& a : amplitudes) {
    out << ' ' << format_amplitude(a);
  }
  out << '\n';
}

void serialize_edge(std::ostringstream& out, const std::string& keyword,
                    const std::string& head, const EdgeDecl& e) {
  out << keyword << ' ' << head;
  if (e.pauli) {
    out << " PAULI " << e.pauli->to_string() << '\n';
  } else if (e.dense) {
    if (e.dense_path.empty()) {
      throw Error("serialize: dense edge '" + e.id + "' has no file path");
    }
    out << " DENSE " << e.dense_path << '\n';
  } else {
    throw Error("serialize: edge '" + e.id + "' has no operator");
  }
}

}  // namespace

std::string serialize(const Document& doc) {
  std::ostringstream out;
  if (const auto* s = std::get_if<ScenarioDoc>(&doc)) {
    out << "SCENARIO " << s->name << '\n';
    out << "BACKEND " << (s->backend == Backend::pauli ? "pauli" : "dense")
        << '\n';
    out << "QUBITS " << s->qubits << '\n';
    if (s->amplitudes) {
      serialize_state(out, *s->amplitudes);
    }
    for (const EdgeDecl& e : s->edges) {
      serialize_edge(out, "EDGE", e.id, e);
    }
    for (const E0Decl& d : s->e0) {
      out << "E0 " << d.id;
      if (d.mu) out << ' ' << *d.mu;
      out << '\n';
    }
    for (const FaceDecl& f : s->faces) {
      out << "FACE " << f.id << " :";
      for (const std::string& e : f.edges) out << ' ' << e;
      out << '\n';
    }
    for (const VolumeDecl& v : s->volumes) {
      out << "VOLUME " << v.id << " :";
      for (const std::string& f : v.faces) out << ' ' << f;
      out << '\n';
    }
    if (s->group) {
      out << "INPUTGROUP M " << s->group->m;
      for (const auto& p : s->group->pairs) {
        out << " PAIR " << p.site << ' ' << p.e0 << ' ' << p.e1;
      }
      for (const auto& r : s->group->srows) {
        out << " SROW " << r.site << ' ' << r.bits;
      }
      out << '\n';
    }
    if (s->ref_face) {
      out << "REFFACE " << *s->ref_face << '\n';
    }
  } else if (const auto* m = std::get_if<MbqcDoc>(&doc)) {
    out << "MBQC " << m->name << '\n';
    out << "QUBITS " << m->qubits << " INPUTS " << m->inputs << " OUTPUTS "
        << m->outputs << '\n';
    serialize_state(out, m->amplitudes);
    for (const ObsDecl& o : m->obs) {
      EdgeDecl as_edge{"site " + std::to_string(o.site), o.pauli, o.dense,
                       o.dense_path};
      serialize_edge(out, "OBS",
                     std::to_string(o.site) + " " + std::to_string(o.q),
                     as_edge);
    }
    auto rows = [&out](const char* name,
                       const std::vector<std::string>& rs) {
      out << "MATRIX " << name;
      for (const std::string& r : rs) out << ' ' << r;
      out << '\n';
    };
    rows("Z", m->z_rows);
    rows("T", m->t_rows);
    rows("S", m->s_rows);
  } else {
    const ModelDoc& mod = std::get<ModelDoc>(doc);
    out << "MODEL " << mod.name << '\n';
    for (const auto& c : mod.contexts) {
      out << "CONTEXT " << c.id << " :";
      for (const std::string& e : c.edges) out << ' ' << e;
      out << '\n';
    }
    for (const auto& p : mod.probs) {
      Rational r = p.p;
      BigInt num = boost::multiprecision::numerator(r);
      BigInt den = boost::multiprecision::denominator(r);
      out << "P " << p.context << ' ' << p.bits << ' ' << num.str() << '/'
          << den.str() << '\n';
    }
  }
  return out.str();
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.has_parent_path() ? path.parent_path()
                                                    : ".");
}

void write_document(const Document& doc, const std::filesystem::path& path) {
  std::filesystem::path dir =
      path.has_parent_path() ? path.parent_path() : ".";
  std::string text = serialize(doc);  // validates dense paths first
  if (const auto* s = std::get_if<ScenarioDoc>(&doc)) {
    for (const EdgeDecl& e : s->edges) {
      if (e.dense) {
        write_dense_operator(*e.dense, dir / e.dense_path);
      }
    }
  } else if (const auto* m = std::get_if<MbqcDoc>(&doc)) {
    for (const ObsDecl& o : m->obs) {
      if (o.dense) {
        write_dense_operator(*o.dense, dir / o.dense_path);
      }
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << text;
}

DenseOperator load_dense_operator(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path.string() + "'");
  }
  std::size_t dim = 0;
  if (!(in >> dim) || dim == 0) {
    throw Error("dense operator file '" + path.string() +
                "' must start with the dimension");
  }
  DenseOperator op(dim);
  for (std::size_t i = 0; i < dim * dim; ++i) {
    double re, im;
    if (!(in >> re >> im)) {
      throw Error("dense operator file '" + path.string() +
                  "' is truncated (needs dim^2 re/im pairs)");
    }
    op.a[i] = cplx{re, im};
  }
  return op;
}

void write_dense_operator(const DenseOperator& op,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << op.dim << '\n';
  for (std::size_t r = 0; r < op.dim; ++r) {
    for (std::size_t c = 0; c < op.dim; ++c) {
      if (c) out << ' ';
      const cplx& v = op.at(r, c);
      out << format_double(v.real()) << ' ' << format_double(v.imag());
    }
    out << '\n';
  }
}

ChainComplex scenario_to_complex(const ScenarioDoc& doc) {
  std::vector<EdgeClass> edges;
  for (const EdgeDecl& e : doc.edges) {
    if (doc.backend == Backend::pauli) {
      if (!e.pauli) {
        throw Error("edge '" + e.id + "': pauli backend requires PAULI edges");
      }
      if (e.pauli->sites() != doc.qubits) {
        throw Error("edge '" + e.id + "': word length differs from QUBITS");
      }
      edges.push_back({e.id, Observable(*e.pauli)});
    } else {
      // The dense backend also accepts Pauli declarations, as matrices.
      DenseOperator op = e.pauli ? to_dense(*e.pauli) : *e.dense;
      if (op.dim != (std::size_t{1} << doc.qubits)) {
        throw Error("edge '" + e.id + "': dimension differs from QUBITS");
      }
      edges.push_back({e.id, Observable(std::move(op))});
    }
  }
  std::vector<std::string> e0;
  std::map<std::string, int> mu;
  for (const E0Decl& d : doc.e0) {
    e0.push_back(d.id);
    if (d.mu) mu[d.id] = *d.mu;
  }
  std::optional<StateVector> state;
  if (doc.amplitudes) {
    state = StateVector(*doc.amplitudes).normalized();
  }
  std::vector<Face> faces;
  for (const FaceDecl& f : doc.faces) {
    faces.push_back(Face{f.id, f.edges, 0});
  }
  std::vector<Volume> volumes;
  for (const VolumeDecl& v : doc.volumes) {
    volumes.push_back(Volume{v.id, v.faces});
  }
  return ChainComplex::build(std::move(edges), std::move(e0),
                             std::move(state), std::move(mu),
                             std::move(faces), std::move(volumes));
}

std::optional<InputGroup> scenario_input_group(const ScenarioDoc& doc) {
  if (!doc.group) return std::nullopt;
  const InputGroupDecl& g = *doc.group;
  std::map<std::size_t, std::string> srow_by_site;
  for (const auto& r : g.srows) {
    if (!srow_by_site.emplace(r.site, r.bits).second) {
      throw Error("INPUTGROUP: duplicate SROW for site " +
                  std::to_string(r.site));
    }
  }
  InputGroup group;
  group.m = g.m;
  for (const auto& p : g.pairs) {
    if (p.site == 0) {
      throw Error("INPUTGROUP: sites are numbered from 1");
    }
    auto it = srow_by_site.find(p.site);
    if (it == srow_by_site.end()) {
      throw Error("INPUTGROUP: PAIR site " + std::to_string(p.site) +
                  " has no SROW");
    }
    group.pairs.push_back(InputGroup::Pair{
        p.site - 1, p.e0, p.e1, BitVector::from_string(it->second)});
  }
  return group;
}

MbqcSpec mbqc_to_spec(const MbqcDoc& doc) {
  MbqcSpec spec;
  spec.n_sites = doc.qubits;
  spec.n_inputs = doc.inputs;
  spec.n_outputs = doc.outputs;
  spec.state = StateVector(doc.amplitudes).normalized();

  std::vector<std::array<std::optional<Observable>, 2>> slots(doc.qubits);
  for (const ObsDecl& o : doc.obs) {
    if (o.site == 0 || o.site > doc.qubits) {
      throw Error("OBS site " + std::to_string(o.site) + " out of range");
    }
    Observable obs = o.pauli ? Observable(*o.pauli) : Observable(*o.dense);
    slots[o.site - 1][o.q] = std::move(obs);
  }
  for (std::size_t i = 0; i < doc.qubits; ++i) {
    if (!slots[i][0] || !slots[i][1]) {
      throw Error("site " + std::to_string(i + 1) +
                  " needs OBS declarations for both basis bits");
    }
    spec.obs.push_back({*slots[i][0], *slots[i][1]});
  }

  auto to_matrix = [](const std::vector<std::string>& rows, std::size_t r,
                      std::size_t c, const char* name) {
    if (rows.size() != r) {
      throw Error(std::string("MATRIX ") + name + ": expected " +
                  std::to_string(r) + " rows");
    }
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        throw Error(std::string("MATRIX ") + name + ": row " +
                    std::to_string(i + 1) + " must have " +
                    std::to_string(c) + " bits");
      }
      for (std::size_t j = 0; j < c; ++j) {
        m.set(i, j, rows[i][j] == '1');
      }
    }
    return m;
  };
  spec.z_matrix = to_matrix(doc.z_rows, doc.outputs, doc.qubits, "Z");
  spec.t_matrix = to_matrix(doc.t_rows, doc.qubits, doc.qubits, "T");
  spec.s_matrix = to_matrix(doc.s_rows, doc.qubits, doc.inputs, "S");
  spec.validate();
  return spec;
}

EmpiricalModel model_to_empirical(const ModelDoc& doc) {
  EmpiricalModel model;
  std::map<std::string, std::size_t> edge_index;
  for (const auto& ctx : doc.contexts) {
    for (const std::string& e : ctx.edges) {
      if (edge_index.emplace(e, model.edges.size()).second) {
        model.edges.push_back(e);
      }
    }
  }
  std::map<std::string, std::size_t> context_index;
  for (const auto& ctx : doc.contexts) {
    EmpiricalModel::Context c;
    c.id = ctx.id;
    for (const std::string& e : ctx.edges) {
      c.edges.push_back(edge_index.at(e));
    }
    c.probs.assign(std::size_t{1} << ctx.edges.size(), 0);
    context_index.emplace(ctx.id, model.contexts.size());
    model.contexts.push_back(std::move(c));
  }
  for (const auto& p : doc.probs) {
    EmpiricalModel::Context& ctx =
        model.contexts[context_index.at(p.context)];
    std::size_t word = 0;
    for (std::size_t i = 0; i < p.bits.size(); ++i) {
      if (p.bits[i] == '1') word |= std::size_t{1} << i;
    }
    ctx.probs[word] = p.p;
  }
  model.validate();
  return model;
}

ScenarioDoc complex_to_scenario(const std::string& name,
                                const ChainComplex& c,
                                const std::optional<InputGroup>& group,
                                const std::optional<std::string>& ref_face) {
  ScenarioDoc doc;
  doc.name = name;
  if (c.edges().empty()) {
    throw Error("complex_to_scenario: complex has no edges");
  }
  doc.backend = c.edges().front().rep.backend();
  std::size_t dim = c.edges().front().rep.dim();
  doc.qubits = 0;
  while ((std::size_t{1} << doc.qubits) < dim) ++doc.qubits;

  if (c.state()) {
    doc.amplitudes = c.state()->amp;
  }
  for (const EdgeClass& e : c.edges()) {
    EdgeDecl d;
    d.id = e.id;
    if (e.rep.is_pauli()) {
      d.pauli = e.rep.pauli();
    } else {
      d.dense = e.rep.dense();
      d.dense_path = name + "_" + e.id + ".op";
    }
    doc.edges.push_back(std::move(d));
  }
  for (const std::string& id : c.e0()) {
    E0Decl d;
    d.id = id;
    if (!c.state()) {
      d.mu = c.mu().at(id);
    }
    doc.e0.push_back(std::move(d));
  }
  for (const Face& f : c.faces()) {
    doc.faces.push_back(FaceDecl{f.id, f.edges});
  }
  for (const Volume& v : c.volumes()) {
    doc.volumes.push_back(VolumeDecl{v.id, v.faces});
  }
  if (group) {
    InputGroupDecl g;
    g.m = group->m;
    for (const auto& p : group->pairs) {
      g.pairs.push_back(InputGroupDecl::Pair{p.site + 1, p.e0, p.e1});
      g.srows.push_back(
          InputGroupDecl::SRow{p.site + 1, p.srow.to_string()});
    }
    doc.group = std::move(g);
  }
  doc.ref_face = ref_face;
  return doc;
}

}  // namespace coho
