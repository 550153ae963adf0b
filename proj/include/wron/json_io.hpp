#ifndef WRON_JSON_IO_HPP
#define WRON_JSON_IO_HPP

#include <json.hpp>

#include "wron/cells.hpp"
#include "wron/generalv.hpp"
#include "wron/mutations.hpp"
#include "wron/poly.hpp"
#include "wron/words.hpp"

namespace wron {

using Json = nlohmann::json;

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const PolyTuple& y);
PolyTuple poly_tuple_from_json(const Json& j);

Json to_json(const BetheTuple& y);
BetheTuple bethe_tuple_from_json(const Json& j);

Json to_json(const UniMatrix& g);
UniMatrix uni_matrix_from_json(const Json& j);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rational_vec_from_json(const Json& j);

Json to_json(const TriangularCoords& a);
Json to_json(const Subspace& V);
Json to_json(const SingularData& sd);
Json to_json(const BetheReport& rep);

}  // namespace wron

#endif
