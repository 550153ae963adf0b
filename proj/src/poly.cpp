#include "wron/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace wron {

namespace {
const Rational kZero = 0;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& v) {
  Poly p;
  if (v != 0) p.c_ = {v};
  return p;
}

Poly Poly::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  Poly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, 0);
    p.c_.back() = coeff;
  }
  return p;
}

Poly Poly::divided_power(unsigned n) {
  return monomial(static_cast<int>(n), 1 / factorial(n));
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rational& Poly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return Poly();
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
  return Poly(std::move(r));
}

Poly Poly::derivative(int n) const {
  Poly p = *this;
  for (int i = 0; i < n; ++i) p = p.derivative();
  return p;
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shift(const Rational& z) const {
  // Horner in the polynomial ring: f(x+z) = ((c_n (x+z) + c_{n-1})(x+z) + ...
  Poly acc;
  Poly lin({z, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + Poly::constant(*it);
  return acc;
}

Poly Poly::truncate(int max_degree) const {
  if (max_degree < 0) return Poly();
  if (degree() <= max_degree) return *this;
  return Poly(std::vector<Rational>(c_.begin(), c_.begin() + max_degree + 1));
}

Poly Poly::monic() const {
  if (c_.empty()) return Poly();
  return *this * (1 / c_.back());
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (is_zero()) return Poly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(degree() - divisor.degree() + 1, 0);
  const auto& d = divisor.c_;
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    Rational q = rem[i + d.size() - 1] / d.back();
    quot[i] = q;
    if (q != 0)
      for (size_t j = 0; j < d.size(); ++j) rem[i + j] -= q * d[j];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return Poly(std::move(quot));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& a = coeff(i);
    if (a == 0) continue;
    Rational mag = a < 0 ? Rational(-a) : a;
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << rational_to_string(mag);
    if (i > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    // remainder of x by y
    std::vector<Rational> rem = x.coeffs();
    const auto& d = y.coeffs();
    while (rem.size() >= d.size() && !rem.empty()) {
      Rational q = rem.back() / d.back();
      size_t off = rem.size() - d.size();
      for (size_t j = 0; j < d.size(); ++j) rem[off + j] -= q * d[j];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (rem.size() < d.size()) break;
    }
    x = y;
    y = Poly(std::move(rem));
  }
  return x.monic();
}

Poly pow(const Poly& base, unsigned exp) {
  Poly r = Poly::constant(1);
  for (unsigned i = 0; i < exp; ++i) r = r * base;
  return r;
}

}  // namespace wron
