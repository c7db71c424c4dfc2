#pragma once

#include <string>

#include "schurvec/report.hpp"
#include "schurvec/supervec.hpp"

namespace schurvec {

// JSON interchange. Spaces carry their two dimensions; maps carry named
// spaces and one dense block per parity with entries as canonical rational
// strings. Parsers validate shape and reject anything malformed with a
// message naming the offending path.

inline OrderedJson space_to_json(const SuperSpace& v) {
  OrderedJson j;
  j["even"] = v.dim.even;
  j["odd"] = v.dim.odd;
  return j;
}

inline OrderedJson block_to_json(const RatMat& m) {
  OrderedJson rows = OrderedJson::array();
  for (int r = 0; r < m.rows(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline OrderedJson map_to_json(const SuperMap& f) {
  OrderedJson j;
  j["domain"] = space_to_json(f.domain);
  j["codomain"] = space_to_json(f.codomain);
  j["even_block"] = block_to_json(f.even_block);
  j["odd_block"] = block_to_json(f.odd_block);
  return j;
}

inline OrderedJson sequence_to_json(const ZeroSequence& seq) {
  OrderedJson j;
  j["i"] = map_to_json(seq.i);
  j["p"] = map_to_json(seq.p);
  return j;
}

inline SuperSpace space_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("even") || !j.contains("odd"))
    throw precondition_error(where + ": expected {\"even\", \"odd\"}");
  if (!j["even"].is_number_integer() || !j["odd"].is_number_integer())
    throw precondition_error(where + ": dimensions must be integers");
  long long e = j["even"].get<long long>(), o = j["odd"].get<long long>();
  if (e < 0 || o < 0 || e > (1 << 20) || o > (1 << 20))
    throw precondition_error(where + ": dimensions out of range");
  return make_space(static_cast<int>(e), static_cast<int>(o));
}

inline RatMat block_from_json(const Json& j, int rows, int cols,
                              const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw precondition_error(where + ": expected " + std::to_string(rows) +
                             " rows");
  RatMat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw precondition_error(where + " row " + std::to_string(r) +
                               ": expected " + std::to_string(cols) +
                               " entries");
    for (int c = 0; c < cols; ++c) {
      const Json& cell = row[c];
      if (!cell.is_string())
        throw precondition_error(where + "[" + std::to_string(r) + "][" +
                                 std::to_string(c) +
                                 "]: entries are rational strings");
      m(r, c) = parse_rational(cell.get<std::string>());
    }
  }
  return m;
}

inline SuperMap map_from_json(const Json& j,
                              const std::string& where = "map") {
  if (!j.is_object())
    throw precondition_error(where + ": expected an object");
  for (const char* key : {"domain", "codomain", "even_block", "odd_block"})
    if (!j.contains(key))
      throw precondition_error(where + ": missing \"" + key + "\"");
  SuperSpace dom = space_from_json(j["domain"], where + ".domain");
  SuperSpace cod = space_from_json(j["codomain"], where + ".codomain");
  RatMat even = block_from_json(j["even_block"], cod.dim.even, dom.dim.even,
                                where + ".even_block");
  RatMat odd = block_from_json(j["odd_block"], cod.dim.odd, dom.dim.odd,
                               where + ".odd_block");
  return SuperMap(dom, cod, std::move(even), std::move(odd));
}

inline ZeroSequence sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("i") || !j.contains("p"))
    throw precondition_error("sequence: expected {\"i\", \"p\"}");
  return ZeroSequence(map_from_json(j["i"], "sequence.i"),
                      map_from_json(j["p"], "sequence.p"));
}

}  // namespace schurvec
