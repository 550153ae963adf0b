#ifndef WRON_WRONSKIAN_HPP
#define WRON_WRONSKIAN_HPP

#include <span>
#include <vector>

#include "wron/poly.hpp"

namespace wron {

/// r-tuple of polynomials, a point of a population.
struct PolyTuple {
  std::vector<Poly> entries;
  int rank() const { return static_cast<int>(entries.size()); }
  bool operator==(const PolyTuple&) const = default;
};

/// Wr(f, g) = f g' - f' g.
Poly wronskian2(const Poly& f, const Poly& g);

/// det (f_b^{(a-1)}), computed exactly over the polynomial ring.
Poly wronskian(std::span<const Poly> fs);
Poly wronskian(std::initializer_list<Poly> fs);

/// Determinant of a square matrix of polynomials (Laplace expansion;
/// sizes here never exceed r+1 <= 7).
Poly poly_determinant(const std::vector<std::vector<Poly>>& m);

/// The composition law Wr(Wr(A), Wr(B)) = Wr(A cap B) * Wr(A cup B)
/// with A = [a+1], B = [a] u {a+2}, for fs of length a+2.
bool w5_check(std::span<const Poly> fs);

}  // namespace wron

#endif
