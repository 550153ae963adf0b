#include "wron/json_io.hpp"

namespace wron {

Json to_json(const Rational& x) { return rational_to_string(x); }

Rational rational_from_json(const Json& j) {
  return rational_from_string(j.get<std::string>());
}

Json to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return Poly(coeffs);
}

Json to_json(const PolyTuple& y) {
  Json arr = Json::array();
  for (const Poly& p : y.entries) arr.push_back(to_json(p));
  return arr;
}

PolyTuple poly_tuple_from_json(const Json& j) {
  PolyTuple y;
  for (const Json& p : j) y.entries.push_back(poly_from_json(p));
  return y;
}

Json to_json(const BetheTuple& y) {
  Json arr = Json::array();
  for (const Poly& p : y.entries) arr.push_back(to_json(p));
  return arr;
}

BetheTuple bethe_tuple_from_json(const Json& j) {
  BetheTuple y;
  for (const Json& p : j) y.entries.push_back(poly_from_json(p));
  y.rank = static_cast<int>(y.entries.size());
  return y;
}

Json to_json(const UniMatrix& g) {
  Json rows = Json::array();
  for (const auto& row : g.entries) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  return rows;
}

UniMatrix uni_matrix_from_json(const Json& j) {
  UniMatrix g;
  for (const Json& row : j) {
    RatVec r;
    for (const Json& v : row) r.push_back(rational_from_json(v));
    g.entries.push_back(r);
  }
  g.rank = static_cast<int>(g.entries.size()) - 1;
  return g;
}

Json to_json(const Word& w) {
  Json arr = Json::array();
  for (int letter : w.letters) arr.push_back(letter);
  return Json{{"letters", arr}, {"rank", w.rank}};
}

Word word_from_json(const Json& j) {
  Word w;
  for (const Json& l : j.at("letters")) w.letters.push_back(l.get<int>());
  w.rank = j.at("rank").get<int>();
  return w;
}

Json to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const Rational& x : v) arr.push_back(to_json(x));
  return arr;
}

std::vector<Rational> rational_vec_from_json(const Json& j) {
  std::vector<Rational> v;
  for (const Json& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const TriangularCoords& a) {
  Json rows = Json::array();
  for (const auto& row : a.rows) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const Subspace& V) {
  Json basis = Json::array();
  for (const Poly& p : V.basis) basis.push_back(to_json(p));
  return Json{{"basis", basis}, {"rank", V.rank}};
}

Json to_json(const SingularData& sd) {
  Json points = Json::array();
  for (const Rational& z : sd.points) points.push_back(to_json(z));
  Json weights = Json::array();
  for (const auto& mu : sd.weights) weights.push_back(mu);
  Json twists = Json::array();
  for (const Poly& t : sd.twists) twists.push_back(to_json(t));
  return Json{{"points", points}, {"weights", weights}, {"twists", twists}};
}

Json to_json(const BetheReport& rep) {
  Json roots = Json::array();
  for (const auto& grp : rep.roots) {
    Json g = Json::array();
    for (const auto& z : grp) g.push_back(Json::array({z.real(), z.imag()}));
    roots.push_back(g);
  }
  return Json{{"status", rep.status},
              {"max_residual", rep.max_residual},
              {"residuals", rep.residuals},
              {"roots", roots}};
}

}  // namespace wron
