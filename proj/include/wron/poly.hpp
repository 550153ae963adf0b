#ifndef WRON_POLY_HPP
#define WRON_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "wron/rational.hpp"

namespace wron {

/// Dense univariate polynomial over Rational, coefficients ascending.
/// The zero polynomial is the empty coefficient vector; degree() of
/// zero is -1 (internal bookkeeping only).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& v);
  static Poly monomial(int degree, const Rational& coeff = 1);
  /// x^n / n!
  static Poly divided_power(unsigned n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i; zero outside the stored range.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly derivative() const;
  Poly derivative(int n) const;
  Rational evaluate(const Rational& x) const;
  /// f(x + z); shift(-z) composes with x -> x - z.
  Poly shift(const Rational& z) const;
  Poly truncate(int max_degree) const;
  /// Monic rescale; zero polynomial stays zero.
  Poly monic() const;

  /// Quotient if the division is exact, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& base, unsigned exp);

}  // namespace wron

#endif
