#include "doctest.h"

#include "zastava/rng.hpp"
#include "zastava/whittaker.hpp"

using namespace zastava;
using P = Poly<Rational>;
using Pt = ZastavaPoint<Rational>;

namespace {

Rational rq(long n, long d = 1) { return make_rational(n, d); }

Pt a1_point(std::vector<WY<Rational>> node) {
  return Pt(RootSystem::named("A1"), {std::move(node)});
}

const Pt& running() {
  static Pt p = a1_point({{rq(0), rq(1)}, {rq(1), rq(2)}});
  return p;
}

Pt random_regular_a1(Rng& rng, int a) {
  auto ws = rng.distinct_rationals(a, 12, 4);
  std::vector<WY<Rational>> node;
  for (const auto& w : ws) node.push_back({w, rng.nonzero_rational(9, 3)});
  return a1_point(node);
}

}  // namespace

TEST_CASE("ext_class a=1: both routes give [1/y]") {
  auto p = a1_point({{rq(3), rq(2)}});
  auto closed = ext_class(p, ExtRoute::closed_form);
  auto oracle = ext_class(p, ExtRoute::bezout_oracle);
  CHECK(closed.a == 1);
  CHECK(closed.c == std::vector<Rational>{rq(1, 2)});
  CHECK(closed == oracle);
}

TEST_CASE("ext_class on the running example") {
  auto closed = ext_class(running(), ExtRoute::closed_form);
  CHECK(closed.a == 2);
  CHECK(closed.c == std::vector<Rational>{rq(-1, 2), rq(1, 2), rq(1, 2)});
  CHECK(closed == ext_class(running(), ExtRoute::bezout_oracle));
}

TEST_CASE("ext_class routes agree on random regular points") {
  Rng rng(derive_seed(20260825, "test.whittaker.routes", 0));
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_regular_a1(rng, int(rng.integer(1, 6)));
    CHECK(ext_class(p, ExtRoute::closed_form) == ext_class(p, ExtRoute::bezout_oracle));
  }
}

TEST_CASE("ext_class rejects boundary points") {
  CHECK_THROWS_AS(ext_class(a1_point({{rq(0), rq(0)}, {rq(1), rq(2)}}), ExtRoute::closed_form),
                  NonCoprime);
  CHECK_THROWS_AS(ext_class(a1_point({{rq(0), rq(0)}, {rq(1), rq(2)}}), ExtRoute::bezout_oracle),
                  NonCoprime);
}

TEST_CASE("chi_pairing: single-point closed forms") {
  auto p = a1_point({{rq(3), rq(2)}});
  CHECK(chi_pairing(p, {P{rq(5)}}, ChiSide::plus) == rq(5, 2));   // k / y
  CHECK(chi_pairing(p, {P{rq(5)}}, ChiSide::minus) == rq(10));    // k * y
}

TEST_CASE("chi_pairing: monomial K reads off ext-class coefficients") {
  auto e = ext_class(running(), ExtRoute::closed_form);
  for (int k = 0; k <= 2; ++k) {
    auto chi = chi_pairing(running(), {P::monomial(k, rq(1))}, ChiSide::plus);
    CHECK(chi == e.c[k]);
  }
  CHECK(chi_pairing(running(), {P::monomial(2, rq(1))}, ChiSide::plus) == rq(1, 2));
}

TEST_CASE("chi_minus is chi_plus after the involution") {
  Rng rng(derive_seed(20260825, "test.whittaker.chi", 0));
  auto a2 = RootSystem::named("A2");
  for (int trial = 0; trial < 25; ++trial) {
    auto ws = rng.distinct_rationals(2, 10, 3);
    Pt p(a2, {{{ws[0], rng.nonzero_rational(7, 3)}}, {{ws[1], rng.nonzero_rational(7, 3)}}});
    std::vector<P> ks{P{rng.rational(5, 2), rng.rational(5, 2)},
                      P{rng.rational(5, 2), rng.rational(5, 2)}};
    CHECK(chi_pairing(p, ks, ChiSide::minus) == chi_pairing(involution(p), ks, ChiSide::plus));
  }
}

TEST_CASE("chi_pairing enforces the regular locus") {
  CHECK_THROWS_AS(chi_pairing(a1_point({{rq(0), rq(0)}}), {P{rq(1)}}, ChiSide::plus),
                  RegularLocusViolation);
  auto a2 = RootSystem::named("A2");
  Pt coincident(a2, {{{rq(0), rq(1)}}, {{rq(0), rq(2)}}});
  CHECK_THROWS_AS(chi_pairing(coincident, {P{rq(1)}, P{rq(1)}}, ChiSide::plus),
                  RegularLocusViolation);
  CHECK_THROWS_AS(chi_pairing(running(), {}, ChiSide::plus), SchemaError);
}

TEST_CASE("kronecker report on the running example") {
  auto rep = kronecker_check(running());
  CHECK(rep.a == 2);
  CHECK(rep.c_tilde.c == std::vector<Rational>{rq(1), rq(2), rq(2)});
  CHECK(rep.c.c == std::vector<Rational>{rq(-1, 2), rq(1, 2), rq(1, 2)});
  CHECK(rep.det_tilde == rq(-2));
  CHECK(rep.det_l == rq(-1, 2));
  CHECK(rep.resultant_value == rq(2));
  CHECK(rep.sigma == rq(-1));
  CHECK(rep.sigma_expected == -1);
  CHECK(rep.unit_product == rq(1));
  CHECK(rep.tail_routes_agree);
  CHECK(rep.resultant_routes_agree);
}

TEST_CASE("kronecker report in the 1x1 case") {
  auto rep = kronecker_check(a1_point({{rq(4), rq(7)}}));
  CHECK(rep.a == 1);
  CHECK(rep.det_tilde == rq(7));       // det L~ = y = R(w)
  CHECK(rep.resultant_value == rq(7));
  CHECK(rep.det_l == rq(1, 7));
  CHECK(rep.sigma == rq(1));
  CHECK(rep.sigma_expected == 1);
}

TEST_CASE("kronecker signs and units across a = 1..6") {
  Rng rng(derive_seed(20260825, "test.whittaker.kron", 0));
  for (int a = 1; a <= 6; ++a) {
    for (int trial = 0; trial < 5; ++trial) {
      auto p = random_regular_a1(rng, a);
      auto rep = kronecker_check(p);
      CHECK(rep.sigma == Rational(rep.sigma_expected));
      CHECK(rep.det_tilde == Rational(rep.sigma_expected) * rep.resultant_value);
      bool unit = rep.unit_product == rq(1) || rep.unit_product == rq(-1);
      CHECK(unit);
      CHECK(rep.tail_routes_agree);
      CHECK(rep.resultant_routes_agree);
    }
  }
}

TEST_CASE("kronecker_check rejects boundary points and the empty point") {
  CHECK_THROWS_AS(kronecker_check(a1_point({{rq(0), rq(0)}})), NonCoprime);
  CHECK_THROWS_AS(kronecker_check(Pt::empty(RootSystem::named("A1"))),
                  InsufficientCoefficients);
}

TEST_CASE("hankel_split_locus values") {
  CHECK(hankel_split_locus(running()) == rq(-1, 2));
  CHECK(hankel_split_locus(a1_point({{rq(2), rq(5)}})) == rq(1, 5));  // c_0 = 1/y
}

TEST_CASE("hankel_split_locus matches det L of the full report") {
  Rng rng(derive_seed(20260825, "test.whittaker.split", 0));
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_regular_a1(rng, int(rng.integer(1, 5)));
    CHECK(hankel_split_locus(p) == kronecker_check(p).det_l);
  }
}
