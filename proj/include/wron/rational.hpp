#ifndef WRON_RATIONAL_HPP
#define WRON_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wron {

/// Exact rational scalar. Always kept in canonical form (positive
/// denominator, gcd(num, den) = 1) by the backend.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

/// "p/q", or just "p" when q = 1. Round-trips bit-exactly.
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace wron

#endif
