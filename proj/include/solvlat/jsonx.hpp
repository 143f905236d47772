#pragma once
#include <json.hpp>

#include <string>
#include <vector>

#include "solvlat/linalg.hpp"

namespace solvlat {

using json = nlohmann::json;  // std::map-backed objects: keys serialize sorted

inline json rat_to_json(const Rational& q) { return rat_to_string(q); }

inline json qn_to_json(const QuadNum& x) {
  return json{{"r", rat_to_string(x.r)}, {"s", rat_to_string(x.s)}};
}

inline json qvec_to_json(const std::vector<QuadNum>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(qn_to_json(x));
  return a;
}

inline json qmat_to_json(const Mat<QuadNum>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(qn_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json imat_to_json(const Mat<Integer>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Rational rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw ParseError("expected rational literal, got " + j.dump());
}

inline QuadNum qn_from_json(const json& j, long disc) {
  if (j.is_number_integer() || j.is_string()) return QuadNum(rat_from_json(j));
  if (!j.is_object() || !j.contains("r") || !j.contains("s"))
    throw ParseError("expected {\"r\",\"s\"} field element, got " + j.dump());
  return QuadNum(rat_from_json(j.at("r")), rat_from_json(j.at("s")), disc);
}

inline std::vector<QuadNum> qvec_from_json(const json& j, long disc) {
  if (!j.is_array()) throw ParseError("expected array of field elements");
  std::vector<QuadNum> v;
  for (const auto& e : j) v.push_back(qn_from_json(e, disc));
  return v;
}

inline Mat<QuadNum> qmat_from_json(const json& j, long disc) {
  if (!j.is_array()) throw ParseError("expected matrix (array of rows)");
  std::vector<std::vector<QuadNum>> rows;
  for (const auto& r : j) rows.push_back(qvec_from_json(r, disc));
  return rows_to_mat(rows);
}

inline Mat<Integer> imat_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected integer matrix (array of rows)");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("expected matrix row");
    std::vector<Integer> row;
    for (const auto& e : r) {
      if (e.is_number_integer()) {
        row.push_back(Integer(static_cast<long>(e.get<long long>())));
      } else if (e.is_string()) {
        try {
          row.push_back(Integer(e.get<std::string>(), 10));
        } catch (const std::invalid_argument&) {
          throw ParseError("bad integer literal: " + e.dump());
        }
      } else {
        throw ParseError("expected integer entry, got " + e.dump());
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Mat<Integer>(0, 0);
  Mat<Integer> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols) throw ParseError("ragged integer matrix");
    for (int j2 = 0; j2 < m.cols; ++j2) m(i, j2) = rows[i][j2];
  }
  return m;
}

// Canonical dump: sorted keys (std::map), two-space indent, trailing newline.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace solvlat
