#pragma once

// JSON for scalars, matrices, presentations, seeds, certificates and
// structure constants. Scalars travel as strings "p/q"; integers are also
// accepted on input. nlohmann::json keeps object keys sorted, which makes
// the output byte-stable.

#include "twseg/clifford.hpp"
#include "twseg/findim.hpp"
#include "twseg/normality.hpp"
#include "twseg/quadratic.hpp"
#include "twseg/twisting.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace twseg::io {

using json = nlohmann::json;

inline json to_json(const Scalar& x) { return to_string(x); }

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  throw input_error("scalar must be a string \"p/q\" or an integer, got " + j.dump());
}

inline json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw input_error("expected an array of scalars");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

inline json to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw input_error("expected a non-empty array of matrix rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  const std::size_t cols = rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw input_error("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

inline json word_to_json(const GeneratorSet& g, const Word& w) {
  json out = json::array();
  for (int l : w) out.push_back(g.name(static_cast<std::size_t>(l)));
  return out;
}

inline Word word_from_json(const GeneratorSet& g, const json& j) {
  if (!j.is_array()) throw input_error("a word is a list of generator names");
  Word w;
  for (const auto& x : j) {
    if (!x.is_string()) throw input_error("generator names must be strings");
    w.push_back(static_cast<int>(g.index_of(x.get<std::string>())));
  }
  return w;
}

/// [[word, scalar], ...]
inline json to_json(const GeneratorSet& g, const FreeElement& e) {
  json out = json::array();
  for (const auto& [w, c] : e.terms()) out.push_back(json::array({word_to_json(g, w), to_json(c)}));
  return out;
}

inline FreeElement element_from_json(const GeneratorSet& g, const json& j) {
  if (!j.is_array() || j.empty()) throw input_error("an element is a non-empty list of [word, scalar] pairs");
  std::optional<int> degree;
  FreeElement e(0);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw input_error("each term is a [word, scalar] pair");
    Word w = word_from_json(g, term[0]);
    if (degree && *degree != static_cast<int>(w.size())) throw input_error("element is not homogeneous");
    if (!degree) {
      degree = static_cast<int>(w.size());
      e = FreeElement(*degree);
    }
    e.add(w, scalar_from_json(term[1]));
  }
  return e;
}

inline json to_json(const QuadraticPresentation& p) {
  json rels = json::array();
  for (const auto& r : p.relation_elements()) rels.push_back(to_json(p.gens(), r));
  return json{{"generators", p.gens().names()}, {"relations", rels}};
}

inline QuadraticPresentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators")) throw input_error("presentation needs \"generators\"");
  std::vector<std::string> names;
  for (const auto& x : j.at("generators")) {
    if (!x.is_string()) throw input_error("generator names must be strings");
    names.push_back(x.get<std::string>());
  }
  GeneratorSet g(names);
  std::vector<FreeElement> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      FreeElement e = element_from_json(g, r);
      if (e.degree() != 2) throw input_error("relations must be quadratic");
      rels.push_back(std::move(e));
    }
  return QuadraticPresentation::from_relations(g, rels);
}

/// {"dimV", "dimU", "blocks": {"C","D","P","Q"}} or {"dimV", "dimU", "matrix"}.
inline TwistingSeed seed_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dimV") || !j.contains("dimU")) throw input_error("twist needs dimV and dimU");
  const auto n = j.at("dimV").get<std::size_t>(), m = j.at("dimU").get<std::size_t>();
  if (j.contains("blocks")) {
    if (n != 2 || m != 2) throw input_error("block form needs dimV = dimU = 2");
    const auto& b = j.at("blocks");
    Twist2x2 t;
    for (auto [key, mat] : {std::pair{"C", &t.C}, {"D", &t.D}, {"P", &t.P}, {"Q", &t.Q}})
      if (b.contains(key)) *mat = mat_from_json(b.at(key));
    return t.to_seed();
  }
  if (j.contains("matrix")) return TwistingSeed(n, m, mat_from_json(j.at("matrix")));
  throw input_error("twist needs \"blocks\" or \"matrix\"");
}

inline json to_json(const TwistingSeed& s) {
  json out{{"dimV", s.dim_v()}, {"dimU", s.dim_u()}};
  if (s.dim_v() == 2 && s.dim_u() == 2) {
    const Twist2x2 t = Twist2x2::from_seed(s);
    out["blocks"] = {{"C", to_json(t.C)}, {"D", to_json(t.D)}, {"P", to_json(t.P)}, {"Q", to_json(t.Q)}};
  } else {
    out["matrix"] = to_json(s.matrix());
  }
  return out;
}

inline json to_json(const GradedQuotient& q, const NormalCertificate& c) {
  return json{{"w", to_json(q.presentation().gens(), q.lift(c.w))}, {"nu1", to_json(c.nu1)},
              {"checked_degree", c.checked_degree}};
}

inline json to_json(const FinDimAlgebra& a) {
  json table = json::array();
  for (const auto& row : a.table) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    table.push_back(std::move(r));
  }
  return json{{"dim", a.dim}, {"unit", to_json(a.unit)}, {"table", table}};
}

inline FinDimAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("unit") || !j.contains("table"))
    throw input_error("structure constants need \"unit\" and \"table\"");
  Vec unit = vec_from_json(j.at("unit"));
  std::vector<std::vector<Vec>> table;
  for (const auto& row : j.at("table")) {
    std::vector<Vec> r;
    for (const auto& v : row) r.push_back(vec_from_json(v));
    table.push_back(std::move(r));
  }
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != unit.size())
    throw input_error("\"dim\" does not match the unit vector");
  return FinDimAlgebra::from_table(std::move(unit), std::move(table));
}

}  // namespace twseg::io
