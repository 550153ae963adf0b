#include "wron/wronskian.hpp"

#include <stdexcept>

namespace wron {

Poly wronskian2(const Poly& f, const Poly& g) {
  return f * g.derivative() - f.derivative() * g;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly det;
  std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
  for (size_t k = 0; k < n; ++k) {
    if (m[0][k].is_zero()) continue;
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == k) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Poly term = m[0][k] * poly_determinant(minor);
    det = (k % 2 == 0) ? det + term : det - term;
  }
  return det;
}

Poly wronskian(std::span<const Poly> fs) {
  if (fs.empty()) throw std::invalid_argument("wronskian: empty tuple");
  size_t k = fs.size();
  std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
  for (size_t b = 0; b < k; ++b) {
    m[0][b] = fs[b];
    for (size_t a = 1; a < k; ++a) m[a][b] = m[a - 1][b].derivative();
  }
  return poly_determinant(m);
}

Poly wronskian(std::initializer_list<Poly> fs) {
  std::vector<Poly> v(fs);
  return wronskian(std::span<const Poly>(v));
}

bool w5_check(std::span<const Poly> fs) {
  if (fs.size() < 3) throw std::invalid_argument("w5_check: need a+2 >= 3 functions");
  size_t a = fs.size() - 2;
  std::vector<Poly> setA(fs.begin(), fs.begin() + a + 1);          // [a+1]
  std::vector<Poly> setB(fs.begin(), fs.begin() + a);              // [a] u {a+2}
  setB.push_back(fs[a + 1]);
  std::vector<Poly> inter(fs.begin(), fs.begin() + a);             // [a]
  std::vector<Poly> uni(fs.begin(), fs.end());                     // [a+2]
  Poly lhs = wronskian2(wronskian(std::span<const Poly>(setA)),
                        wronskian(std::span<const Poly>(setB)));
  Poly cap = inter.empty() ? Poly::constant(1) : wronskian(std::span<const Poly>(inter));
  Poly rhs = cap * wronskian(std::span<const Poly>(uni));
  return lhs == rhs;
}

}  // namespace wron
