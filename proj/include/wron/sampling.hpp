#ifndef WRON_SAMPLING_HPP
#define WRON_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "wron/rational.hpp"

namespace wron {

/// Seed-deterministic source of random rational samples. All randomized
/// operations in the library draw through one of these.
class RationalSampler {
 public:
  explicit RationalSampler(uint64_t seed) : rng_(seed) {}

  /// Numerator and denominator uniform in [1, 99].
  Rational positive() {
    std::uniform_int_distribution<int> d(1, 99);
    return Rational(d(rng_), d(rng_));
  }

  /// Numerator uniform in [-99, 99] \ {0}, denominator in [1, 99].
  Rational signed_nonzero() {
    std::uniform_int_distribution<int> num(-99, 98);
    std::uniform_int_distribution<int> den(1, 99);
    int n = num(rng_);
    if (n >= 0) ++n;
    return Rational(n, den(rng_));
  }

  std::vector<Rational> positive_vec(size_t n) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = positive();
    return v;
  }

  std::vector<Rational> signed_vec(size_t n) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = signed_nonzero();
    return v;
  }

  int uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wron

#endif
