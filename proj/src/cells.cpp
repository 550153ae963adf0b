#include "wron/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace wron {

UniMatrix UniMatrix::identity(int rank) {
  UniMatrix m;
  m.rank = rank;
  int n = rank + 1;
  m.entries.assign(n, RatVec(n, 0));
  for (int i = 0; i < n; ++i) m.entries[i][i] = 1;
  return m;
}

UniMatrix operator*(const UniMatrix& a, const UniMatrix& b) {
  if (a.rank != b.rank) throw std::invalid_argument("UniMatrix product: rank mismatch");
  int n = a.size();
  UniMatrix c;
  c.rank = a.rank;
  c.entries.assign(n, RatVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) {
      if (a.entries[i][k] == 0) continue;
      for (int j = k; j < n; ++j) c.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return c;
}

UniMatrix elementary(int i, const Rational& c, int rank) {
  if (i < 1 || i > rank) throw std::invalid_argument("elementary: index out of range");
  UniMatrix m = UniMatrix::identity(rank);
  m.entries[i - 1][i] = c;
  return m;
}

UniMatrix chart(const Word& w, const std::vector<Rational>& params) {
  if (params.size() != w.length())
    throw std::invalid_argument("chart: params length mismatch");
  UniMatrix g = UniMatrix::identity(w.rank);
  for (size_t t = 0; t < w.length(); ++t)
    g = elementary(w.letters[t], params[t], w.rank) * g;
  return g;
}

BasisColumn standard_column(int rank) {
  if (rank < 1) throw std::invalid_argument("standard_column: rank < 1");
  BasisColumn b;
  b.rank = rank;
  for (int i = 0; i <= rank; ++i) b.entries.push_back(Poly::divided_power(i));
  return b;
}

BasisColumn act(const UniMatrix& g, const BasisColumn& b) {
  if (g.rank != b.rank) throw std::invalid_argument("act: rank mismatch");
  int n = g.size();
  BasisColumn out;
  out.rank = b.rank;
  out.entries.assign(n, Poly());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      out.entries[i] = out.entries[i] + g.entries[i][j] * b.entries[j];
  return out;
}

bool cell_membership(const BasisColumn& b) {
  int r = b.rank;
  if (static_cast<int>(b.entries.size()) != r + 1) return false;
  for (int i = 1; i <= r + 1; ++i) {
    const Poly& p = b.entries[i - 1];
    if (p.degree() > r) return false;
    for (int j = 0; j < i - 1; ++j)
      if (p.coeff(j) != 0) return false;
    if (p.coeff(i - 1) != Rational(1) / Rational(factorial(i - 1))) return false;
  }
  return true;
}

Rational minor(const UniMatrix& g, const std::vector<int>& rows,
               const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: shape mismatch");
  size_t k = rows.size();
  RatMat m(k, RatVec(k));
  for (size_t a = 0; a < k; ++a) {
    if (rows[a] < 1 || rows[a] > g.size() || cols[a] < 1 || cols[a] > g.size())
      throw std::invalid_argument("minor: index out of range");
    for (size_t b = 0; b < k; ++b) m[a][b] = g.entries[rows[a] - 1][cols[b] - 1];
  }
  return determinant(m);
}

Word standard_longest_word(int rank) {
  Word w;
  w.rank = rank;
  for (int k = 1; k <= rank; ++k)
    for (int i = k; i >= 1; --i) w.letters.push_back(i);
  return w;
}

std::optional<std::vector<Rational>> whitney_factorize(const UniMatrix& g) {
  int n = g.size();
  RatMat m = g.entries;
  // Reduce to the identity by row operations row_i -= c * row_{i+1},
  // clearing columns right to left, each column top-down; the inverse
  // operations, read backwards, spell out chart(h0, params).
  std::vector<Rational> ops;
  for (int col = n; col >= 2; --col) {
    for (int row = 1; row < col; ++row) {
      const Rational& entry = m[row - 1][col - 1];
      const Rational& pivot = m[row][col - 1];
      Rational c;
      if (pivot == 0) {
        if (entry != 0) return std::nullopt;
      } else {
        c = entry / pivot;
      }
      for (int j = 0; j < n; ++j) m[row - 1][j] -= c * m[row][j];
      ops.push_back(c);
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

namespace {

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool positive_by_minors(const UniMatrix& g, uint64_t seed) {
  int n = g.size();
  RationalSampler sampler(seed);
  Word h0 = standard_longest_word(g.rank);
  std::vector<UniMatrix> witnesses;
  for (int w = 0; w < 4; ++w)
    witnesses.push_back(chart(h0, sampler.positive_vec(h0.length())));
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> sets;
    subsets_of_size(n, k, sets);
    for (const auto& rows : sets)
      for (const auto& cols : sets) {
        bool vanishes = true;
        for (const auto& wit : witnesses)
          if (minor(wit, rows, cols) != 0) {
            vanishes = false;
            break;
          }
        if (vanishes) continue;
        if (minor(g, rows, cols) <= 0) return false;
      }
  }
  return true;
}

bool positive_by_factorization(const UniMatrix& g) {
  auto params = whitney_factorize(g);
  if (!params) return false;
  for (const Rational& c : *params)
    if (c <= 0) return false;
  return true;
}

}  // namespace

bool is_totally_positive(const UniMatrix& g, uint64_t seed) {
  if (g.rank <= 4) return positive_by_minors(g, seed);
  return positive_by_factorization(g);
}

UniMatrix totally_positive_sample(int rank, RationalSampler& sampler) {
  Word h0 = standard_longest_word(rank);
  return chart(h0, sampler.positive_vec(h0.length()));
}

UniMatrix column_to_matrix(const BasisColumn& b) {
  int n = b.rank + 1;
  UniMatrix g;
  g.rank = b.rank;
  g.entries.assign(n, RatVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.entries[i][j] = Rational(factorial(j)) * b.entries[i].coeff(j);
  return g;
}

BasisColumn matrix_to_column(const UniMatrix& g) {
  return act(g, standard_column(g.rank));
}

}  // namespace wron
