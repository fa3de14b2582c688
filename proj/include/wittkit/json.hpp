#pragma once

#include "wittkit/abelian.hpp"
#include "wittkit/error.hpp"
#include "wittkit/int_matrix.hpp"
#include "wittkit/integer.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace wittkit {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones strings.
inline Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + j.dump());
}

/// {"rank": r, "torsion": [d1, ..., dk]}
inline Json group_to_json(const FgAbGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion()) t.push_back(integer_to_json(d));
  return Json{{"rank", g.rank()}, {"torsion", std::move(t)}};
}

inline FgAbGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("torsion") || !j["torsion"].is_array() ||
      !j["rank"].is_number_integer() || j["rank"].get<std::int64_t>() < 0)
    throw Error(ErrorKind::InvalidArgument, "group must be {\"rank\": r, \"torsion\": [...]}");
  std::vector<Integer> t;
  for (const auto& d : j["torsion"]) t.push_back(integer_from_json(d));
  return FgAbGroup(j["rank"].get<std::size_t>(), std::move(t));
}

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// A list of equal-length rows. `[]` is the 0 x 0 matrix.
inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  std::vector<Integer> e;
  e.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw Error(ErrorKind::InvalidArgument, "matrix rows must have equal length");
    for (const auto& x : row) e.push_back(integer_from_json(x));
  }
  return IntMatrix(rows, cols, std::move(e));
}

inline Json exponent_to_json(const Exponent& e) {
  return e.value ? integer_to_json(*e.value) : Json("INFINITE");
}

}  // namespace wittkit
