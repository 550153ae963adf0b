#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wron/poly.hpp"
#include "wron/sampling.hpp"
#include "wron/wronskian.hpp"

using namespace wron;

namespace {

Poly random_poly(RationalSampler& s, int max_deg) {
  std::vector<Rational> c;
  int d = s.uniform_int(0, max_deg);
  for (int i = 0; i <= d; ++i) c.push_back(s.signed_nonzero());
  return Poly(c);
}

}  // namespace

TEST_CASE("rational string round-trip") {
  CHECK(rational_to_string(rat(1, 2)) == "1/2");
  CHECK(rational_to_string(rat(-3)) == "-3");
  CHECK(rational_from_string("7/3") == rat(7, 3));
  CHECK(rational_from_string("-5") == rat(-5));
  CHECK(rational_from_string(rational_to_string(rat(-22, 46))) == rat(-11, 23));
}

TEST_CASE("poly arithmetic") {
  Poly x = Poly::monomial(1);
  CHECK(Poly::divided_power(2).derivative() == x);
  CHECK((Poly{1, 1} * Poly{1, -1}) == Poly{1, 0, -1});
  CHECK(Poly{1, 1, rat(1, 2)}.evaluate(2) == 5);
  CHECK(Poly::constant(3).derivative().is_zero());
  CHECK(Poly{1, 2, 1}.shift(1) == Poly{4, 4, 1});
  CHECK(Poly{1, 2, 1}.shift(1).shift(-1) == Poly{1, 2, 1});
}

TEST_CASE("truncate") {
  CHECK(Poly{1, 1, 1}.truncate(1) == Poly{1, 1});
  CHECK(Poly().truncate(5).is_zero());
  CHECK(Poly::monomial(3).truncate(2).is_zero());
  Poly f{3, 0, 7, 2};
  CHECK(f.truncate(f.degree()) == f);
  CHECK(f.truncate(2).truncate(2) == f.truncate(2));
}

TEST_CASE("divide_exact and gcd") {
  Poly f = Poly{1, 1} * Poly{2, 0, 3};
  CHECK(*f.divide_exact(Poly{1, 1}) == Poly{2, 0, 3});
  CHECK(!f.divide_exact(Poly{1, 2}).has_value());
  CHECK(gcd(Poly{1, 1} * Poly{1, 0, 1}, Poly{1, 1} * Poly{5, 1}) == Poly{1, 1});
}

TEST_CASE("wronskian basics") {
  CHECK(wronskian({Poly{1}, Poly::monomial(1), Poly::divided_power(2)}) == Poly{1});
  Poly f{4, 0, 2, 1};
  CHECK(wronskian({f}) == f);
  CHECK(wronskian({Poly::monomial(1), Poly::monomial(3)}) == Poly::monomial(3, 2));
  CHECK(wronskian2(Poly{1}, Poly::monomial(1)) == Poly{1});
  CHECK(wronskian2(f, f).is_zero());
}

TEST_CASE("wronskian2 closed form") {
  RationalSampler s(11);
  for (int t = 0; t < 20; ++t) {
    Rational t1 = s.signed_nonzero(), t2 = s.signed_nonzero();
    Poly f = Poly{1} + t1 * Poly::monomial(1);
    Poly g = Poly::monomial(1) + t2 * Poly::divided_power(2);
    Poly expect = Poly{1} + t2 * Poly::monomial(1) + t1 * t2 * Poly::divided_power(2);
    CHECK(wronskian2(f, g) == expect);
  }
}

TEST_CASE("wronskian antisymmetry and linearity") {
  RationalSampler s(12);
  for (int t = 0; t < 25; ++t) {
    Poly f = random_poly(s, 6), g = random_poly(s, 6), h = random_poly(s, 6);
    CHECK(wronskian({f, g, h}) == -wronskian({g, f, h}));
    CHECK(wronskian({f + g, h}) == wronskian({f, h}) + wronskian({g, h}));
  }
}

TEST_CASE("monomial formula") {
  for (int d1 = 0; d1 <= 6; ++d1)
    for (int d2 = d1 + 1; d2 <= 7; ++d2)
      for (int d3 = d2 + 1; d3 <= 8; ++d3) {
        Rational c = Rational((d2 - d1) * (d3 - d1) * (d3 - d2));
        int deg = d1 + d2 + d3 - 3;
        CHECK(wronskian({Poly::monomial(d1), Poly::monomial(d2), Poly::monomial(d3)}) ==
              Poly::monomial(deg, c));
      }
}

TEST_CASE("W5 identity") {
  CHECK(w5_check(std::vector<Poly>{Poly{1}, Poly::monomial(1), Poly::monomial(2)}));
  RationalSampler s(13);
  for (int t = 0; t < 200; ++t) {
    int a = 1 + t % 3;
    std::vector<Poly> fs;
    for (int i = 0; i < a + 2; ++i) fs.push_back(random_poly(s, 6));
    CHECK(w5_check(fs));
  }
}

TEST_CASE("W5 cubic example") {
  RationalSampler s(14);
  for (int t = 0; t < 10; ++t) {
    Poly f1 = random_poly(s, 3), f2 = random_poly(s, 3), f3 = random_poly(s, 3);
    CHECK(wronskian2(wronskian2(f1, f2), wronskian2(f1, f3)) ==
          f1 * wronskian({f1, f2, f3}));
  }
}
