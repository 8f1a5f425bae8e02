#pragma once

/// JSON and CSV forms of the library's values.  A field element is written
/// as its list of power-basis rationals "p/q", lowest degree first; matrices
/// always carry their coloring basis.

#include "skeinrep/colorings.hpp"
#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/pairing.hpp"
#include "skeinrep/polynomial.hpp"
#include "skeinrep/representation.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace skeinrep {

using nlohmann::json;

inline json coeff_list(const CycNum& x) {
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(rational_to_string(c));
  return out;
}

inline CycNum cycnum_from_coeff_list(const CycField& f, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient list must be an array");
  std::vector<BigRational> c;
  c.reserve(j.size());
  for (const auto& s : j) c.push_back(rational_from_string(s.get<std::string>()));
  return CycNum::from_coeffs(f, std::move(c));
}

inline json cycnum_to_json(const CycNum& x) {
  return json{{"r", x.field().level()}, {"coeffs", coeff_list(x)}};
}

inline CycNum cycnum_from_json(const json& j) {
  const CycField& f = CycField::get(j.at("r").get<long>());
  return cycnum_from_coeff_list(f, j.at("coeffs"));
}

inline json coloring_to_json(const Coloring& c) {
  json out = json::array();
  for (int v : c.values) out.push_back(v);
  return out;
}

inline Coloring coloring_from_json(const json& j) {
  Coloring c;
  for (const auto& v : j) c.values.push_back(v.get<int>());
  return c;
}

inline json graph_to_json(const TrivalentGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  json boundary = json::array();
  for (int v : g.boundary()) boundary.push_back(v);
  return json{{"vertices", g.vertex_count()},
              {"edges", edges},
              {"loops", g.vertexless_loops()},
              {"boundary", boundary}};
}

inline TrivalentGraph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return TrivalentGraph(j.at("vertices").get<int>(), std::move(edges),
                        j.at("loops").get<int>());
}

inline json matrix_entries_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(coeff_list(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_entries_from_json(const CycField& f, const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m.at(i, k) = cycnum_from_coeff_list(f, j.at(i).at(k));
  return m;
}

inline json repmatrix_to_json(const RepMatrix& m) {
  json basis = json::array();
  for (const auto& c : m.basis) basis.push_back(coloring_to_json(c));
  return json{{"r", m.r},
              {"genus", m.genus},
              {"basis", basis},
              {"matrix", matrix_entries_to_json(m.mat)}};
}

inline RepMatrix repmatrix_from_json(const json& j) {
  const long r = j.at("r").get<long>();
  const CycField& f = CycField::get(r);
  RepMatrix out{r, j.at("genus").get<int>(), {}, matrix_entries_from_json(f, j.at("matrix"))};
  for (const auto& c : j.at("basis")) out.basis.push_back(coloring_from_json(c));
  return out;
}

inline json gram_to_json(const GramForm& g) {
  json basis = json::array();
  for (const auto& c : g.basis) basis.push_back(coloring_to_json(c));
  json norms = json::array();
  for (const auto& n : g.norms) norms.push_back(coeff_list(n));
  return json{{"r", g.r}, {"basis", basis}, {"norms", norms}};
}

inline GramForm gram_from_json(const json& j) {
  GramForm out;
  out.r = j.at("r").get<long>();
  const CycField& f = CycField::get(out.r);
  for (const auto& c : j.at("basis")) out.basis.push_back(coloring_from_json(c));
  for (const auto& n : j.at("norms")) out.norms.push_back(cycnum_from_coeff_list(f, n));
  return out;
}

/// Compact one-token form of a field element for CSV rows.
inline std::string coeff_string(const CycNum& x) {
  std::ostringstream os;
  const auto c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ';';
    os << rational_to_string(c[i]);
  }
  return os.str();
}

/// CSV rows "name,i,j,coeffs" for every nonzero entry, in row-major order.
inline void matrix_to_csv(std::ostream& os, const std::string& name, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      os << name << ',' << i << ',' << j << ',' << coeff_string(m.at(i, j)) << '\n';
    }
  }
}

}  // namespace skeinrep
