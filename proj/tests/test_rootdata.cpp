#include "doctest.h"

#include "zastava/rootdata.hpp"

using namespace zastava;

TEST_CASE("named A2 is simply laced") {
  auto rs = RootSystem::named("A2");
  CHECK(rs->rank() == 2);
  CHECK(rs->cartan_matrix() == std::vector<std::vector<long>>{{2, -1}, {-1, 2}});
  CHECK(rs->d(0) == 1);
  CHECK(rs->d(1) == 1);
  CHECK(rs->d_max() == 1);
  CHECK(rs->simply_laced());
  CHECK(rs->d_check(0) == Rational(1));
}

TEST_CASE("named B2 puts the long coroot first") {
  auto rs = RootSystem::named("B2");
  CHECK(rs->d(0) == 2);
  CHECK(rs->d(1) == 1);
  CHECK(rs->d_max() == 2);
  CHECK(rs->d_check(0) == Rational(1));
  CHECK(rs->d_check(1) == Rational(2));
  CHECK(rs->cartan(0, 1) == -1);
  CHECK(rs->cartan(1, 0) == -2);
}

TEST_CASE("named C3 mirrors B: short coroots first") {
  auto rs = RootSystem::named("C3");
  CHECK(rs->d(0) == 1);
  CHECK(rs->d(1) == 1);
  CHECK(rs->d(2) == 2);
  CHECK(rs->d_max() == 2);
}

TEST_CASE("named G2 has d=3 on node 0") {
  auto rs = RootSystem::named("G2");
  CHECK(rs->d(0) == 3);
  CHECK(rs->d(1) == 1);
  CHECK(rs->d_max() == 3);
  CHECK(rs->cartan(0, 1) == -1);
  CHECK(rs->cartan(1, 0) == -3);
  CHECK(rs->d_check(0) == Rational(1));
  CHECK(rs->d_check(1) == Rational(3));
}

TEST_CASE("named F4 symmetrizers") {
  auto rs = RootSystem::named("F4");
  CHECK(rs->d(0) == 1);
  CHECK(rs->d(1) == 1);
  CHECK(rs->d(2) == 2);
  CHECK(rs->d(3) == 2);
}

TEST_CASE("named D4 and E6 are simply laced") {
  CHECK(RootSystem::named("D4")->simply_laced());
  CHECK(RootSystem::named("E6")->simply_laced());
  CHECK(RootSystem::named("E6")->rank() == 6);
}

TEST_CASE("bilinear form is symmetric on all built-in types") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "F4", "G2"}) {
    auto rs = RootSystem::named(name);
    for (int i = 0; i < rs->rank(); ++i) {
      CHECK(rs->root_dot_root(i, i) == 2 * rs->d(i));
      for (int j = 0; j < rs->rank(); ++j) {
        CHECK(rs->root_dot_root(i, j) == rs->root_dot_root(j, i));
        // the three expressions for alpha_i.alpha_j agree
        CHECK(Rational(rs->root_dot_root(i, j)) ==
              Rational(rs->d_max() * rs->cartan(i, j)) / rs->d_check(i));
      }
    }
  }
}

TEST_CASE("A2 pairing example") {
  auto rs = RootSystem::named("A2");
  CHECK(rs->root_dot_root(0, 1) == -1);
}

TEST_CASE("coweight pairings") {
  auto a1 = RootSystem::named("A1");
  // lambda with <lambda, alpha-check> = 2 is alpha itself: lambda.lambda = 2
  Coweight two{{2}};
  CHECK(a1->coweight_dot_coweight(two, two) == Rational(2));
  CHECK(a1->root_dot_coweight(0, two) == 2);

  // fundamental coweight of A1: omega.omega = 1/2
  Coweight fund{{1}};
  CHECK(a1->coweight_dot_coweight(fund, fund) == Rational(1, 2));

  auto a2 = RootSystem::named("A2");
  Coweight w1{{1, 0}}, w2{{0, 1}};
  // inverse Cartan of A2 is (1/3)[[2,1],[1,2]]
  CHECK(a2->coweight_dot_coweight(w1, w1) == Rational(2, 3));
  CHECK(a2->coweight_dot_coweight(w1, w2) == Rational(1, 3));
  CHECK(a2->coweight_dot_coweight(w1, w2) == a2->coweight_dot_coweight(w2, w1));

  // alpha_1 as a coweight of A2: pairings (2,-1), alpha.alpha = 2
  Coweight alpha1{{2, -1}};
  CHECK(a2->coweight_dot_coweight(alpha1, alpha1) == Rational(2));
  CHECK(a2->root_dot_coweight(0, alpha1) == 2);
  CHECK(a2->root_dot_coweight(1, alpha1) == -1);

  Coweight dom{{1, 0}}, notdom{{1, -1}};
  CHECK(dom.dominant());
  CHECK_FALSE(notdom.dominant());
}

TEST_CASE("from_cartan accepts a valid custom matrix") {
  auto rs = RootSystem::from_cartan({{2, -2}, {-1, 2}});
  CHECK(rs->rank() == 2);
  CHECK(rs->name().empty());
  CHECK(rs->d(0) * rs->cartan(0, 1) == rs->d(1) * rs->cartan(1, 0));
  CHECK(rs->d_max() == 2);
}

TEST_CASE("from_cartan rejects affine, asymmetric and positive input") {
  // affine A1: determinant 0, not positive definite
  CHECK_THROWS_AS(RootSystem::from_cartan({{2, -2}, {-2, 2}}), InvalidCartan);
  // zero pattern must be symmetric
  CHECK_THROWS_AS(RootSystem::from_cartan({{2, -1}, {0, 2}}), InvalidCartan);
  // positive off-diagonal entry
  CHECK_THROWS_AS(RootSystem::from_cartan({{2, 1}, {1, 2}}), InvalidCartan);
  // wrong diagonal
  CHECK_THROWS_AS(RootSystem::from_cartan({{1}}), InvalidCartan);
  // not square
  CHECK_THROWS_AS(RootSystem::from_cartan({{2, -1}}), InvalidCartan);
}

TEST_CASE("named rejects unknown labels") {
  CHECK_THROWS_AS(RootSystem::named("H2"), InvalidCartan);
  CHECK_THROWS_AS(RootSystem::named("B1"), InvalidCartan);
  CHECK_THROWS_AS(RootSystem::named("G3"), InvalidCartan);
  CHECK_THROWS_AS(RootSystem::named(""), InvalidCartan);
}

TEST_CASE("colored divisor union, disjointness and degree") {
  using D = ColoredDivisor<Rational>;
  D a{{{Rational(0), 0}}};
  D b{{{Rational(1), 1}}};
  D u = divisor_union(a, b);
  CHECK(u.entries.size() == 2);
  CHECK(u.degree_per_color(2) == std::vector<long>{1, 1});

  D c{{{Rational(0), 1}}};
  CHECK_FALSE(disjoint_support(a, c));  // same point, different colors
  CHECK(disjoint_support(a, b));

  // canonicalize sorts by (color, point)
  D m{{{Rational(5), 1}, {Rational(2), 0}, {Rational(1), 1}}};
  m.canonicalize();
  CHECK(m.entries[0] == std::pair<Rational, int>(Rational(2), 0));
  CHECK(m.entries[1] == std::pair<Rational, int>(Rational(1), 1));
  CHECK(m.entries[2] == std::pair<Rational, int>(Rational(5), 1));
}
