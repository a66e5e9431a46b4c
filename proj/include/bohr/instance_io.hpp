//
// file: instance_io.hpp
//
// JSON instance documents:
//
//   { "n": 2,
//     "A": [[[re, im], [re, im]], [[re, im], [re, im]]],
//     "S": ...,
//     "sequence": {"type": "constant", "matrix": ...}
//              or {"type": "list", "matrices": [...]},
//     "mode": "theorem" | "relaxed" }
//
// Doubles are written in shortest round-trip form, so write-then-read
// reproduces every entry exactly.
//
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bohr/functional.hpp"

namespace bohr {

using json = nlohmann::json;

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json instance_to_json(const BohrInstance& inst) {
  json doc;
  doc["n"] = inst.order();
  doc["A"] = matrix_to_json(inst.a);
  doc["S"] = matrix_to_json(inst.s);
  if (inst.seq.kind() == SequenceSpec::Kind::constant) {
    doc["sequence"] = {{"type", "constant"}, {"matrix", matrix_to_json(inst.seq.matrices().front())}};
  } else {
    json ms = json::array();
    for (const auto& m : inst.seq.matrices()) ms.push_back(matrix_to_json(m));
    doc["sequence"] = {{"type", "list"}, {"matrices", std::move(ms)}};
  }
  doc["mode"] = std::string(to_string(inst.mode));
  return doc;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

inline double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) parse_fail(where, "expected a number");
  return v.get<double>();
}

}  // namespace detail

inline ComplexMatrix matrix_from_json(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_array()) detail::parse_fail(field, "expected an array of rows");
  if (v.size() != n)
    detail::parse_fail(field, "has " + std::to_string(v.size()) + " rows, expected " + std::to_string(n));
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = field + "[" + std::to_string(i) + "]";
    const json& row = v[i];
    if (!row.is_array() || row.size() != n)
      detail::parse_fail(row_where, "expected an array of " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = row_where + "[" + std::to_string(j) + "]";
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2) detail::parse_fail(where, "expected [re, im]");
      m(i, j) = Complex{detail::number_at(e[0], where + "[0]"), detail::number_at(e[1], where + "[1]")};
    }
  }
  if (!m.all_finite()) detail::parse_fail(field, "non-finite entry");
  return m;
}

inline BohrInstance instance_from_json(const json& doc) {
  if (!doc.is_object()) detail::parse_fail("document", "expected an object");
  for (const char* key : {"n", "A", "S", "sequence", "mode"})
    if (!doc.contains(key)) detail::parse_fail(key, "missing field");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) detail::parse_fail("n", "expected a positive integer");
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());

  HypothesisMode mode{};
  if (doc["mode"] == "theorem")
    mode = HypothesisMode::theorem;
  else if (doc["mode"] == "relaxed")
    mode = HypothesisMode::relaxed;
  else
    detail::parse_fail("mode", "expected \"theorem\" or \"relaxed\"");

  ComplexMatrix a = matrix_from_json(doc["A"], n, "A");
  ComplexMatrix s = matrix_from_json(doc["S"], n, "S");

  const json& seq = doc["sequence"];
  if (!seq.is_object() || !seq.contains("type")) detail::parse_fail("sequence", "expected an object with a type");
  std::optional<SequenceSpec> spec;
  if (seq["type"] == "constant") {
    if (!seq.contains("matrix")) detail::parse_fail("sequence.matrix", "missing field");
    spec = SequenceSpec::constant(matrix_from_json(seq["matrix"], n, "sequence.matrix"));
  } else if (seq["type"] == "list") {
    if (!seq.contains("matrices") || !seq["matrices"].is_array())
      detail::parse_fail("sequence.matrices", "expected an array");
    std::vector<ComplexMatrix> ms;
    for (std::size_t k = 0; k < seq["matrices"].size(); ++k)
      ms.push_back(matrix_from_json(seq["matrices"][k], n, "sequence.matrices[" + std::to_string(k) + "]"));
    spec = SequenceSpec::finite_list(std::move(ms));
  } else {
    detail::parse_fail("sequence.type", "expected \"constant\" or \"list\"");
  }
  return {std::move(a), std::move(s), std::move(*spec), mode};
}

inline BohrInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return instance_from_json(doc);
}

inline std::string serialize_instance(const BohrInstance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

inline BohrInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

inline void write_instance(const BohrInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << serialize_instance(inst);
}

}  // namespace bohr
