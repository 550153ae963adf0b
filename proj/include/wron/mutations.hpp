#ifndef WRON_MUTATIONS_HPP
#define WRON_MUTATIONS_HPP

#include <optional>
#include <vector>

#include "wron/cells.hpp"
#include "wron/poly.hpp"
#include "wron/words.hpp"
#include "wron/wronskian.hpp"

namespace wron {

/// Tuple (y_1, ..., y_r) with y_i(0) = 1 and deg y_i <= i(r+1-i).
struct BetheTuple {
  std::vector<Poly> entries;
  int rank = 0;

  static BetheTuple ones(int rank);
  bool operator==(const BetheTuple&) const = default;
};

/// Triangular array a_{ij}, 1 <= i <= r, 1 <= j <= r+1-i.
struct TriangularCoords {
  std::vector<std::vector<Rational>> rows;
  int rank = 0;
  bool operator==(const TriangularCoords&) const = default;
};

/// A particular polynomial solution g of Wr(y, g) = h, by undetermined
/// coefficients; the full solution set is g + c*y. nullopt when the
/// system is inconsistent (not fertile).
std::optional<Poly> wronskian_solve(const Poly& y, const Poly& h);

/// The solution of Wr(y_i, .) = y_{i-1} y_{i+1} normalized by
/// g(0) = 0, g'(0) = 1 (y_0 = y_{r+1} = 1). Throws on infertility or
/// when the normalization fails.
Poly normalized_solution(const BetheTuple& y, int i);

/// Replaces y_i by y_i + c * normalized_solution(y, i).
BetheTuple normalized_mutation(const BetheTuple& y, int i, const Rational& c);

/// Fold of normalized mutations over the word, letters[0] first,
/// starting from (1, ..., 1).
BetheTuple evolve(const Word& w, const std::vector<Rational>& params);

/// Monic-normalized mutation: the solution of Wr(y_i, .) =
/// y_{i-1} y_{i+1} that is monic with vanishing coefficient at
/// x^{deg y_i}; replaces y_i by that solution plus v * y_i.
struct MvTuple {
  std::vector<Poly> entries;  // monic entries, y_0 convention = 1
  int rank = 0;
  static MvTuple ones(int rank);
  bool operator==(const MvTuple&) const = default;
};
MvTuple mv_mutation(const MvTuple& y, int i, const Rational& v);
MvTuple mv_evolve(const Word& w, const std::vector<Rational>& params);

/// (b_1, Wr(b_1,b_2), ..., Wr(b_1,...,b_r)). Requires cell membership.
BetheTuple wronski_map(const BasisColumn& b);

/// The unique column with the given image, recovered row by row by a
/// triangular solve; nullopt when y is outside the cell (this doubles
/// as the membership test).
std::optional<BasisColumn> wronski_inverse(const BetheTuple& y);

/// a_{ij} = j! * coeff_j(y_i) for j <= r+1-i.
TriangularCoords triangular_coords(const BetheTuple& y);

/// The unique tuple with the given triangular coordinates.
BetheTuple coords_to_tuple(const TriangularCoords& a);

/// wronski_map(chart(w, params) b^{(0)}) == evolve(w, params).
bool comparison_check(const Word& w, const std::vector<Rational>& params);

/// y is the image of a totally positive matrix. For rank 2 and 3 the
/// minors verdict is cross-checked against closed-form inequalities.
/// Throws when y is outside the cell.
bool positivity_check(const BetheTuple& y, uint64_t seed);

/// Closed-form positivity: rank 2 — all four triangular-basis
/// coefficients positive; rank 3 — all ten positive and
/// b3 := beta3 - (alpha1 beta2 - alpha2) strictly between 0 and beta3.
bool positivity_inequalities(const BetheTuple& y);

/// Every coefficient of y_i at degrees 0..i(r+1-i) strictly positive.
bool all_positive_coeffs(const BetheTuple& y);

}  // namespace wron

#endif
