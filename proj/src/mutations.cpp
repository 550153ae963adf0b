#include "wron/mutations.hpp"

#include <stdexcept>

#include "wron/linalg.hpp"

namespace wron {

BetheTuple BetheTuple::ones(int rank) {
  BetheTuple y;
  y.rank = rank;
  y.entries.assign(rank, Poly::constant(1));
  return y;
}

MvTuple MvTuple::ones(int rank) {
  MvTuple y;
  y.rank = rank;
  y.entries.assign(rank, Poly::constant(1));
  return y;
}

std::optional<Poly> wronskian_solve(const Poly& y, const Poly& h) {
  if (y.is_zero()) throw std::invalid_argument("wronskian_solve: y = 0");
  int dy = y.degree();
  int dh = h.degree();
  int D = (dh + 1 - dy > dy) ? dh + 1 - dy : dy + 1;
  // Columns: coefficients of Wr(y, x^j) for j = 0..D.
  int rows = dy + D;  // max degree of Wr(y, x^j) is dy + D - 1
  if (dh + 1 > rows) rows = dh + 1;
  RatMat A(rows, RatVec(D + 1, 0));
  for (int j = 0; j <= D; ++j) {
    Poly col = y * Poly::monomial(j).derivative() - y.derivative() * Poly::monomial(j);
    for (int m = 0; m <= col.degree(); ++m) A[m][j] = col.coeff(m);
  }
  RatVec rhs(rows, 0);
  for (int m = 0; m <= dh; ++m) rhs[m] = h.coeff(m);
  auto sol = solve_linear(A, rhs);
  if (!sol) return std::nullopt;
  return Poly(sol->particular);
}

Poly normalized_solution(const BetheTuple& y, int i) {
  if (i < 1 || i > y.rank)
    throw std::invalid_argument("normalized_solution: index out of range");
  const Poly one = Poly::constant(1);
  const Poly& yi = y.entries[i - 1];
  const Poly& lo = (i >= 2) ? y.entries[i - 2] : one;
  const Poly& hi = (i <= y.rank - 1) ? y.entries[i] : one;
  auto g = wronskian_solve(yi, lo * hi);
  if (!g) throw std::runtime_error("normalized_solution: not fertile");
  if (yi.evaluate(0) != 1)
    throw std::logic_error("normalized_solution: y_i(0) != 1");
  Poly t = *g - g->evaluate(0) * yi;
  if (t.evaluate(0) != 0 || t.derivative().evaluate(0) != 1)
    throw std::logic_error("normalized_solution: normalization failed");
  return t;
}

BetheTuple normalized_mutation(const BetheTuple& y, int i, const Rational& c) {
  BetheTuple out = y;
  out.entries[i - 1] = y.entries[i - 1] + c * normalized_solution(y, i);
  return out;
}

BetheTuple evolve(const Word& w, const std::vector<Rational>& params) {
  if (params.size() != w.length())
    throw std::invalid_argument("evolve: params length mismatch");
  BetheTuple y = BetheTuple::ones(w.rank);
  for (size_t t = 0; t < w.length(); ++t)
    y = normalized_mutation(y, w.letters[t], params[t]);
  return y;
}

MvTuple mv_mutation(const MvTuple& y, int i, const Rational& v) {
  if (i < 1 || i > y.rank) throw std::invalid_argument("mv_mutation: index out of range");
  const Poly one = Poly::constant(1);
  const Poly& yi = y.entries[i - 1];
  const Poly& lo = (i >= 2) ? y.entries[i - 2] : one;
  const Poly& hi = (i <= y.rank - 1) ? y.entries[i] : one;
  auto g = wronskian_solve(yi, lo * hi);
  if (!g) throw std::runtime_error("mv_mutation: not fertile");
  int k = yi.degree();
  Poly t = *g - (g->coeff(k) / yi.leading()) * yi;
  if (t.is_zero() || t.leading() == 0)
    throw std::logic_error("mv_mutation: normalization failed");
  t = t.monic();
  if (t.coeff(k) != 0) throw std::logic_error("mv_mutation: normalization failed");
  MvTuple out = y;
  out.entries[i - 1] = t + v * yi;
  return out;
}

MvTuple mv_evolve(const Word& w, const std::vector<Rational>& params) {
  if (params.size() != w.length())
    throw std::invalid_argument("mv_evolve: params length mismatch");
  MvTuple y = MvTuple::ones(w.rank);
  for (size_t t = 0; t < w.length(); ++t)
    y = mv_mutation(y, w.letters[t], params[t]);
  return y;
}

BetheTuple wronski_map(const BasisColumn& b) {
  if (!cell_membership(b)) throw std::invalid_argument("wronski_map: not in cell");
  BetheTuple y;
  y.rank = b.rank;
  for (int i = 1; i <= b.rank; ++i) {
    std::span<const Poly> head(b.entries.data(), i);
    y.entries.push_back(wronskian(head));
  }
  return y;
}

namespace {

// Matches coefficients x^1..x^{r+1-i} of Wr(b_1..b_{i-1}, b_i) against
// the targets, where b_i = x^{i-1}/(i-1)! + sum beta_j x^j (j = i..r).
// Returns the solved b_i, or nullopt when the system is inconsistent.
std::optional<Poly> solve_row(const std::vector<Poly>& prefix, int i, int r,
                              const RatVec& targets) {
  std::vector<Poly> args(prefix.begin(), prefix.end());
  args.push_back(Poly::divided_power(i - 1));
  Poly w_base = wronskian(std::span<const Poly>(args));
  int unknowns = r + 1 - i;
  RatMat A(unknowns, RatVec(unknowns, 0));
  std::vector<Poly> w_col(unknowns);
  for (int j = i; j <= r; ++j) {
    args.back() = Poly::monomial(j);
    w_col[j - i] = wronskian(std::span<const Poly>(args));
    for (int m = 1; m <= unknowns; ++m) A[m - 1][j - i] = w_col[j - i].coeff(m);
  }
  RatVec rhs(unknowns);
  for (int m = 1; m <= unknowns; ++m) rhs[m - 1] = targets[m - 1] - w_base.coeff(m);
  auto sol = solve_linear(A, rhs);
  if (!sol) return std::nullopt;
  Poly bi = Poly::divided_power(i - 1);
  for (int j = i; j <= r; ++j) bi = bi + sol->particular[j - i] * Poly::monomial(j);
  return bi;
}

}  // namespace

std::optional<BasisColumn> wronski_inverse(const BetheTuple& y) {
  int r = y.rank;
  BasisColumn b;
  b.rank = r;
  b.entries.push_back(y.entries[0]);
  for (int i = 2; i <= r; ++i) {
    RatVec targets(r + 1 - i);
    for (int m = 1; m <= r + 1 - i; ++m) targets[m - 1] = y.entries[i - 1].coeff(m);
    auto bi = solve_row(b.entries, i, r, targets);
    if (!bi) return std::nullopt;
    b.entries.push_back(*bi);
  }
  b.entries.push_back(Poly::divided_power(r));
  if (!cell_membership(b)) return std::nullopt;
  if (!(wronski_map(b) == y)) return std::nullopt;
  return b;
}

TriangularCoords triangular_coords(const BetheTuple& y) {
  TriangularCoords a;
  a.rank = y.rank;
  for (int i = 1; i <= y.rank; ++i) {
    std::vector<Rational> row;
    for (int j = 1; j <= y.rank + 1 - i; ++j)
      row.push_back(Rational(factorial(j)) * y.entries[i - 1].coeff(j));
    a.rows.push_back(std::move(row));
  }
  return a;
}

BetheTuple coords_to_tuple(const TriangularCoords& a) {
  int r = a.rank;
  BasisColumn b;
  b.rank = r;
  Poly b1 = Poly::constant(1);
  for (int j = 1; j <= r; ++j)
    b1 = b1 + (a.rows[0][j - 1] / Rational(factorial(j))) * Poly::monomial(j);
  b.entries.push_back(b1);
  for (int i = 2; i <= r; ++i) {
    RatVec targets(r + 1 - i);
    for (int m = 1; m <= r + 1 - i; ++m)
      targets[m - 1] = a.rows[i - 1][m - 1] / Rational(factorial(m));
    auto bi = solve_row(b.entries, i, r, targets);
    if (!bi) throw std::logic_error("coords_to_tuple: triangular solve failed");
    b.entries.push_back(*bi);
  }
  b.entries.push_back(Poly::divided_power(r));
  return wronski_map(b);
}

bool comparison_check(const Word& w, const std::vector<Rational>& params) {
  BasisColumn b = act(chart(w, params), standard_column(w.rank));
  return wronski_map(b) == evolve(w, params);
}

bool positivity_inequalities(const BetheTuple& y) {
  if (y.rank == 2) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j <= 2; ++j)
        if (y.entries[i].coeff(j) <= 0) return false;
    return true;
  }
  if (y.rank == 3) {
    if (!all_positive_coeffs(y)) return false;
    TriangularCoords a = triangular_coords(y);
    const Rational& alpha1 = a.rows[0][0];
    const Rational& alpha2 = a.rows[0][1];
    const Rational& beta2 = a.rows[1][0];
    const Rational& beta3 = a.rows[1][1];
    Rational mid = alpha1 * beta2 - alpha2;
    return beta3 > mid && mid > 0;
  }
  throw std::invalid_argument("positivity_inequalities: rank not 2 or 3");
}

bool positivity_check(const BetheTuple& y, uint64_t seed) {
  auto b = wronski_inverse(y);
  if (!b) throw std::domain_error("positivity_check: not in cell");
  bool res = is_totally_positive(column_to_matrix(*b), seed);
  if (y.rank == 2 || y.rank == 3) {
    if (res != positivity_inequalities(y))
      throw std::logic_error("positivity_check: minors and inequalities disagree");
  }
  return res;
}

bool all_positive_coeffs(const BetheTuple& y) {
  for (int i = 1; i <= y.rank; ++i) {
    int bound = i * (y.rank + 1 - i);
    for (int j = 0; j <= bound; ++j)
      if (y.entries[i - 1].coeff(j) <= 0) return false;
  }
  return true;
}

}  // namespace wron
