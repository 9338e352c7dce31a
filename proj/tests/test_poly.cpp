#include "doctest.h"

#include <algorithm>

#include "zastava/poly.hpp"
#include "zastava/roots.hpp"

using namespace zastava;
using P = Poly<Rational>;

namespace {
Rational rq(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("divmod: z^2-z by z+1") {
  auto [quot, rem] = P::divmod(P{rq(0), rq(-1), rq(1)}, P{rq(1), rq(1)});
  CHECK(quot == P{rq(-2), rq(1)});
  CHECK(rem == P{rq(2)});
}

TEST_CASE("divmod: division by zero throws") {
  CHECK_THROWS_AS(P::divmod(P{rq(1), rq(1)}, P::zero()), ZeroDivision);
}

TEST_CASE("divmod: low-degree dividend passes through") {
  auto [quot, rem] = P::divmod(P{rq(3)}, P{rq(0), rq(1)});
  CHECK(quot.is_zero());
  CHECK(rem == P{rq(3)});
}

TEST_CASE("poly_gcd: coprime pair gives 1") {
  CHECK(poly_gcd(P{rq(0), rq(-1), rq(1)}, P{rq(1), rq(1)}) == P{rq(1)});
}

TEST_CASE("poly_gcd: shared factor is recovered monic") {
  P z{rq(0), rq(1)};
  P a = z * (z - P{rq(1)});           // z(z-1)
  P b = rq(3) * z * (z + P{rq(2)});   // 3z(z+2)
  CHECK(poly_gcd(a, b) == z);
}

TEST_CASE("interpolate: running nodes give z+1") {
  P p = interpolate<Rational>({{rq(0), rq(1)}, {rq(1), rq(2)}});
  CHECK(p == P{rq(1), rq(1)});
}

TEST_CASE("interpolate: quadratic through three nodes") {
  P p = interpolate<Rational>({{rq(0), rq(0)}, {rq(1), rq(1)}, {rq(2), rq(4)}});
  CHECK(p == P{rq(0), rq(0), rq(1)});
}

TEST_CASE("interpolate: duplicate node throws") {
  CHECK_THROWS_AS(interpolate<Rational>({{rq(0), rq(1)}, {rq(0), rq(2)}}), DuplicateNode);
}

TEST_CASE("resultant: Res(z^2-z, z+1) = 2") {
  CHECK(resultant(P{rq(0), rq(-1), rq(1)}, P{rq(1), rq(1)}) == rq(2));
}

TEST_CASE("resultant: product over roots") {
  // Q = (z-1)(z-2), R = z^2+1: Res = R(1) R(2) = 2*5 = 10
  P q = P::from_roots({rq(1), rq(2)});
  CHECK(resultant(q, P{rq(1), rq(0), rq(1)}) == rq(10));
}

TEST_CASE("bezout_pair: running example") {
  P q{rq(0), rq(-1), rq(1)};
  P r{rq(1), rq(1)};
  auto bz = bezout_pair(r, q);
  CHECK(bz.d == P{rq(1), rq(-1, 2)});
  CHECK(bz.f == P{rq(-1, 2)});
  CHECK(r * bz.d - q * bz.f == P{rq(1)});
}

TEST_CASE("bezout_pair: identity holds on a denser pair") {
  P q = P::from_roots({rq(-1), rq(2), rq(5, 3)});
  P r{rq(2), rq(0), rq(7)};
  auto bz = bezout_pair(r, q);
  CHECK(r * bz.d - q * bz.f == P{rq(1)});
  CHECK(bz.d.degree() <= q.degree() - 1);
  CHECK(bz.f.degree() <= q.degree() - 2);
}

TEST_CASE("bezout_pair: non-coprime input throws") {
  P z{rq(0), rq(1)};
  CHECK_THROWS_AS(bezout_pair(z, z * (z - P{rq(1)})), NonCoprime);
}

TEST_CASE("bezout_pair: improper degrees throw") {
  CHECK_THROWS_AS(bezout_pair(P{rq(0), rq(1)}, P{rq(1)}), ImproperFraction);
  CHECK_THROWS_AS(bezout_pair(P{rq(0), rq(0), rq(1)}, P{rq(0), rq(-1), rq(1)}), ImproperFraction);
}

TEST_CASE("series_at_infinity: (z+1)/(z^2-z) begins 1,2,2") {
  auto tail = series_at_infinity(P{rq(1), rq(1)}, P{rq(0), rq(-1), rq(1)}, 2);
  CHECK(tail.c == std::vector<Rational>{rq(1), rq(2), rq(2)});
  CHECK(tail.order() == 2);
}

TEST_CASE("series_at_infinity: geometric tail of 1/(z-w)") {
  Rational w = rq(2, 3);
  auto tail = series_at_infinity(P{rq(1)}, P{-w, rq(1)}, 3);
  CHECK(tail.c == std::vector<Rational>{rq(1), w, w * w, w * w * w});
}

TEST_CASE("series_at_infinity: improper fraction throws") {
  CHECK_THROWS_AS(series_at_infinity(P{rq(0), rq(0), rq(1)}, P{rq(0), rq(1)}, 2),
                  ImproperFraction);
  CHECK_THROWS_AS(series_at_infinity(P{rq(1)}, P::zero(), 2), ZeroDivision);
}

TEST_CASE("series_at_infinity: non-monic denominators are handled") {
  // 1/(2z-1) = (1/2) z^-1 + (1/4) z^-2 + ...
  auto tail = series_at_infinity(P{rq(1)}, P{rq(-1), rq(2)}, 1);
  CHECK(tail.c == std::vector<Rational>{rq(1, 2), rq(1, 4)});
}

TEST_CASE("hankel_det: running tails") {
  LaurentTail<Rational> ct{{rq(1), rq(2), rq(2)}};
  CHECK(hankel_det(ct, 2) == rq(-2));
  LaurentTail<Rational> c{{rq(-1, 2), rq(1, 2), rq(1, 2)}};
  CHECK(hankel_det(c, 2) == rq(-1, 2));
}

TEST_CASE("hankel_det: a<=0 is the empty determinant") {
  LaurentTail<Rational> t{{}};
  CHECK(hankel_det(t, 0) == rq(1));
}

TEST_CASE("hankel_det: short tail throws") {
  LaurentTail<Rational> t{{rq(1), rq(2)}};
  CHECK_THROWS_AS(hankel_det(t, 2), InsufficientCoefficients);
}

TEST_CASE("from_roots and evaluation agree") {
  P q = P::from_roots({rq(0), rq(1), rq(-3, 2)});
  CHECK(q.degree() == 3);
  CHECK(q.is_monic());
  CHECK(q(rq(0)) == rq(0));
  CHECK(q(rq(1)) == rq(0));
  CHECK(q(rq(-3, 2)) == rq(0));
  CHECK(q(rq(2)) == rq(7));  // 2*1*(7/2)
}

TEST_CASE("derivative of z^3 - 2z") {
  P p{rq(0), rq(-2), rq(0), rq(1)};
  CHECK(p.derivative() == P{rq(-2), rq(0), rq(3)});
}

TEST_CASE("roots_numeric: recovers simple rational roots") {
  P q = P::from_roots({rq(1), rq(2), rq(3)});
  auto roots = roots_numeric(q);
  REQUIRE(roots.size() == 3);
  std::sort(roots.begin(), roots.end(),
            [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(roots[k] - Complex(double(k + 1), 0.0)) < 1e-9);
  }
}

TEST_CASE("roots_numeric: complex conjugate pair of z^2+1") {
  auto roots = roots_numeric(P{rq(1), rq(0), rq(1)});
  REQUIRE(roots.size() == 2);
  Complex sum = roots[0] + roots[1], prod = roots[0] * roots[1];
  CHECK(std::abs(sum) < 1e-9);
  CHECK(std::abs(prod - Complex(1.0, 0.0)) < 1e-9);
}

TEST_CASE("parse_rational round-trips and rejects garbage") {
  CHECK(parse_rational("-3/6") == rq(-1, 2));
  CHECK(parse_rational("7") == rq(7));
  CHECK(rational_to_string(rq(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("x"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
}
