#ifndef WRON_CELLS_HPP
#define WRON_CELLS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wron/linalg.hpp"
#include "wron/poly.hpp"
#include "wron/sampling.hpp"
#include "wron/words.hpp"
#include "wron/wronskian.hpp"

namespace wron {

/// Upper unitriangular (r+1)x(r+1) matrix.
struct UniMatrix {
  RatMat entries;
  int rank = 0;

  static UniMatrix identity(int rank);
  int size() const { return rank + 1; }
  bool operator==(const UniMatrix&) const = default;
};

UniMatrix operator*(const UniMatrix& a, const UniMatrix& b);

/// Column vector of r+1 polynomials.
struct BasisColumn {
  std::vector<Poly> entries;
  int rank = 0;
  bool operator==(const BasisColumn&) const = default;
};

/// Identity plus c at position (i, i+1).
UniMatrix elementary(int i, const Rational& c, int rank);

/// Product e_{i_m}(c_m)...e_{i_1}(c_1); params[0] belongs to the
/// rightmost (first applied) factor.
UniMatrix chart(const Word& w, const std::vector<Rational>& params);

/// (1, x, x^2/2, ..., x^r/r!).
BasisColumn standard_column(int rank);

BasisColumn act(const UniMatrix& g, const BasisColumn& b);

/// b_i = x^{i-1}/(i-1)! + sum_{j >= i} b_{ij} x^j with deg b_i <= r.
bool cell_membership(const BasisColumn& b);

/// Exact determinant of the submatrix on the given 1-based index sets.
Rational minor(const UniMatrix& g, const std::vector<int>& rows,
               const std::vector<int>& cols);

/// Concatenation of (k, k-1, ..., 1) for k = 1..r, in application order.
Word standard_longest_word(int rank);

/// Peels chart parameters off g along standard_longest_word. Returns
/// the parameters (application order) or nullopt when a pivot vanishes,
/// i.e. g is outside the chart's image.
std::optional<std::vector<Rational>> whitney_factorize(const UniMatrix& g);

/// Every minor not identically zero on N is strictly positive.
/// "Identically zero" is decided at 4 random positive chart witnesses.
/// Exhaustive for rank <= 4; larger ranks fall back to factorization
/// positivity.
bool is_totally_positive(const UniMatrix& g, uint64_t seed);

/// chart(h0, positive random parameters) — certified totally positive.
UniMatrix totally_positive_sample(int rank, RationalSampler& sampler);

/// g_{ij} = (j-1)! * coeff_{j-1}(b_i), the inverse of b = g b^{(0)}.
UniMatrix column_to_matrix(const BasisColumn& b);
BasisColumn matrix_to_column(const UniMatrix& g);

}  // namespace wron

#endif
