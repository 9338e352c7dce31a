#include "doctest.h"

#include "zastava/superpotential.hpp"

using namespace zastava;

namespace {

Rational rq(long n, long d = 1) { return make_rational(n, d); }

// A1, a=1, one dominant coweight with pairing 2 at z=0, so K = z^2 and
// T = w^2; the worked instance behind the critical-section oracles
SuperParams k_square_instance(Variant v, Complex h = Complex(0.3, 0.1),
                              Complex hl = Complex(0.2, -0.4)) {
  SuperParams p;
  p.rs = RootSystem::named("A1");
  p.alpha = {1};
  p.coweights = {Coweight{{2}}};
  p.z = {Complex(0.0, 0.0)};
  p.h_alpha = {h};
  p.h_lambda = {hl};
  p.variant = v;
  return p;
}

SuperParams a2_instance(Variant v) {
  SuperParams p;
  p.rs = RootSystem::named("A2");
  p.alpha = {1, 1};
  p.coweights = {Coweight{{1, 1}}};
  p.z = {Complex(0.3, 0.7)};
  p.h_alpha = {Complex(0.4, -0.2), Complex(-0.3, 0.5)};
  p.h_lambda = {Complex(0.1, 0.6)};
  p.variant = v;
  return p;
}

Config<Complex> a2_config() { return {{{Complex(1.2, -0.4)}, {Complex(-1.1, 0.8)}}}; }

}  // namespace

TEST_CASE("variant parsing and signs") {
  CHECK(Variant::parse("++").s_sign == 1);
  CHECK(Variant::parse("++").exp_sign == 1);
  CHECK(Variant::parse("+-").exp_sign == -1);
  CHECK(Variant::parse("-+").s_sign == -1);
  CHECK(Variant::parse("--").name() == "--");
  CHECK(Variant::parse("++").sigma() == -1);
  CHECK(Variant::parse("+-").sigma() == 1);
  CHECK(Variant::parse("-+").sigma() == 1);
  CHECK(Variant::parse("--").sigma() == -1);
  CHECK_THROWS_AS(Variant::parse("+"), SchemaError);
  CHECK_THROWS_AS(Variant::parse("xx"), SchemaError);
  CHECK_THROWS_AS(Variant::parse(""), SchemaError);
}

TEST_CASE("k_polys closed forms") {
  using P = Poly<Rational>;
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("A1");
  p.alpha = {1};
  p.coweights = {Coweight{{2}}};
  p.z = {rq(0)};
  p.h_alpha = {rq(1)};
  p.h_lambda = {rq(0)};
  CHECK(k_polys(p)[0] == P{rq(0), rq(0), rq(1)});  // z^2

  SuperParamsT<Rational> empty;
  empty.rs = RootSystem::named("A2");
  empty.alpha = {1, 1};
  empty.h_alpha = {rq(0), rq(0)};
  auto ks = k_polys(empty);
  CHECK(ks[0] == P{rq(1)});
  CHECK(ks[1] == P{rq(1)});

  SuperParamsT<Rational> two = p;
  two.coweights = {Coweight{{1}}, Coweight{{1}}};
  two.z = {rq(0), rq(1)};
  two.h_lambda = {rq(0), rq(0)};
  CHECK(k_polys(two)[0] == P{rq(0), rq(-1), rq(1)});  // z(z-1)

  SuperParamsT<Rational> bad = p;
  bad.coweights = {Coweight{{-1}}};
  CHECK_THROWS_AS(k_polys(bad), NonDominant);
}

TEST_CASE("master phi gradient: closed form on the K=z^2 instance") {
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("A1");
  p.alpha = {1};
  p.coweights = {Coweight{{2}}};
  p.z = {rq(0)};
  p.h_alpha = {rq(3, 2)};
  p.h_lambda = {rq(5)};
  Config<Rational> cfg{{{rq(2)}}};
  auto g = master_phi_gradient(p, cfg);
  CHECK(g.dw[0][0] == rq(-3, 2) - rq(1));     // -<a,h*> - 2/w
  CHECK(g.dz[0] == rq(5) + rq(1));            // hl - 2/(z-w)
  CHECK(g.dh_alpha[0] == rq(-2));             // -sum w
  CHECK(g.dh_lambda[0] == rq(0));             // z_1
}

TEST_CASE("master phi gradient: symmetric under same-node exchange") {
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("A1");
  p.alpha = {2};
  p.h_alpha = {rq(1, 3)};
  Config<Rational> ab{{{rq(1), rq(4)}}};
  Config<Rational> ba{{{rq(4), rq(1)}}};
  auto gab = master_phi_gradient(p, ab);
  auto gba = master_phi_gradient(p, ba);
  CHECK(gab.dw[0][0] == gba.dw[0][1]);
  CHECK(gab.dw[0][1] == gba.dw[0][0]);
}

TEST_CASE("master phi gradient: coincident input is rejected") {
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("A2");
  p.alpha = {1, 1};
  p.h_alpha = {rq(0), rq(0)};
  CHECK_THROWS_AS(master_phi_gradient(p, Config<Rational>{{{rq(1)}, {rq(1)}}}),
                  CoincidentPoints);
  SuperParamsT<Rational> pz = p;
  pz.coweights = {Coweight{{1, 0}}};
  pz.z = {rq(1)};
  pz.h_lambda = {rq(0)};
  CHECK_THROWS_AS(master_phi_gradient(pz, Config<Rational>{{{rq(1)}, {rq(2)}}}),
                  CoincidentPoints);
}

TEST_CASE("master phi value: central differences match the gradient") {
  auto p = a2_instance(Variant{});
  auto cfg = a2_config();
  auto g = master_phi_gradient<Complex>(p, cfg);
  const double h = 1e-5;
  for (int i = 0; i < 2; ++i) {
    for (int part = 0; part < 2; ++part) {  // d/d(re w) and d/d(im w)
      Complex step = part == 0 ? Complex(h, 0) : Complex(0, h);
      Config<Complex> hi = cfg, lo = cfg;
      hi.w[i][0] += step;
      lo.w[i][0] -= step;
      Complex fd = (master_phi_value(p, hi) - master_phi_value(p, lo)) / (2.0 * h);
      // d Phi = g dw, so the im-direction derivative is i*g
      Complex expect = part == 0 ? g.dw[i][0] : Complex(0, 1) * g.dw[i][0];
      CHECK(std::abs(fd - expect) < 1e-7);
    }
  }
  // z-direction
  Config<Complex> base = cfg;
  auto pz_hi = p, pz_lo = p;
  pz_hi.z[0] += Complex(h, 0);
  pz_lo.z[0] -= Complex(h, 0);
  Complex fd = (master_phi_value(pz_hi, base) - master_phi_value(pz_lo, base)) / (2.0 * h);
  CHECK(std::abs(fd - g.dz[0]) < 1e-7);
}

TEST_CASE("t factors: K=z^2 instance has T = w^2") {
  auto p = k_square_instance(Variant{});
  Config<Complex> cfg{{{Complex(2.0, 0.0)}}};
  auto tv = t_values(p, cfg);
  CHECK(std::abs(tv[0][0] - Complex(4.0, 0.0)) < 1e-14);
  auto t2 = t_squared<Complex>(p, cfg);
  CHECK(std::abs(t2[0][0] - tv[0][0] * tv[0][0]) < 1e-12);
}

TEST_CASE("t_squared is exact over the rationals and squares t_values") {
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("A2");
  p.alpha = {1, 1};
  p.coweights = {Coweight{{1, 0}}};
  p.z = {rq(5)};
  p.h_alpha = {rq(0), rq(0)};
  p.h_lambda = {rq(0)};
  Config<Rational> cfg{{{rq(1)}, {rq(2)}}};
  auto t2 = t_squared(p, cfg);
  // node 0: T^2 = K(1)^2 * Q_2(1)^{+1} = 16 * (1-2) = -16
  CHECK(t2[0][0] == rq(-16));
  // node 1: T^2 = Q_1(2)^{+1} = 1  (K_2 = 1)
  CHECK(t2[1][0] == rq(1));
}

TEST_CASE("superpotential: empty data gives W = 0") {
  SuperParams p;
  p.rs = RootSystem::named("A1");
  p.alpha = {0};
  p.h_alpha = {Complex(1.0, 0.0)};
  auto ev = superpotential_w(p, Config<Complex>{{{}}}, {{}});
  CHECK(std::abs(ev.value) == 0.0);
}

TEST_CASE("superpotential grad_s matches d_i - exp(-s)T at variant (+-)") {
  auto p = a2_instance(Variant::parse("+-"));
  auto cfg = a2_config();
  auto tv = t_values(p, cfg);
  std::vector<std::vector<Complex>> s{{Complex(0.37, -0.81)}, {Complex(-0.22, 0.95)}};
  auto ev = superpotential_w(p, cfg, s);
  for (int i = 0; i < 2; ++i) {
    Complex expect = 1.0 - std::exp(-s[i][0]) * tv[i][0];
    CHECK(std::abs(ev.grad_s[i][0] - expect) < 1e-13);
  }
}

TEST_CASE("critical section closed forms on K=z^2") {
  Config<Complex> cfg{{{Complex(2.0, 0.0)}}};

  auto minus = critical_section(k_square_instance(Variant::parse("+-")), cfg);
  // s* = log(T/d) = log 4
  CHECK(std::abs(minus.s_star[0][0] - std::log(Complex(4.0, 0.0))) < 1e-14);
  CHECK(std::abs(minus.hessian_diag[0][0] - Complex(1.0, 0.0)) < 1e-14);

  auto plus = critical_section(k_square_instance(Variant::parse("++")), cfg);
  // e^{s*} T = sigma d = -1
  CHECK(std::abs(plus.hessian_diag[0][0] - Complex(-1.0, 0.0)) < 1e-14);
  CHECK(std::abs(std::exp(plus.s_star[0][0]) * plus.t[0][0] + 1.0) < 1e-14);
}

TEST_CASE("critical section: G2 long node satisfies exp(es s*) T = 3 sigma") {
  SuperParams p;
  p.rs = RootSystem::named("G2");
  p.alpha = {1, 0};
  p.coweights = {Coweight{{1, 0}}};
  p.z = {Complex(0.0, 0.0)};
  p.h_alpha = {Complex(0, 0), Complex(0, 0)};
  p.h_lambda = {Complex(0, 0)};
  Config<Complex> cfg{{{Complex(1.7, 0.9)}, {}}};
  for (const char* name : {"++", "+-", "-+", "--"}) {
    p.variant = Variant::parse(name);
    auto sect = critical_section(p, cfg);
    Complex expect = double(p.variant.sigma()) * 3.0;
    CHECK(std::abs(sect.hessian_diag[0][0] - expect) < 1e-13);
  }
}

TEST_CASE("critical section stationarity: grad_s W(s*) = 0 for all variants") {
  for (const char* name : {"++", "+-", "-+", "--"}) {
    auto p = a2_instance(Variant::parse(name));
    auto cfg = a2_config();
    auto sect = critical_section(p, cfg);
    auto ev = superpotential_w(p, cfg, sect.s_star);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(ev.grad_s[i][0]) < 1e-12);
  }
}

TEST_CASE("newton verification agrees with the closed form") {
  for (const char* name : {"++", "--"}) {
    auto p = a2_instance(Variant::parse(name));
    auto cfg = a2_config();
    auto sect = critical_section(p, cfg);
    auto rep = newton_verify(p, cfg, sect, 20, derive_seed(7, "test.super.newton", 0));
    CHECK(rep.all_converged);
    CHECK(rep.max_dist_mod_2pii < 1e-10);
    CHECK(rep.max_iterations <= 100);
  }
}

TEST_CASE("restricted gradient: sigma = -1 variants reproduce grad Phi") {
  Config<Complex> cfg{{{Complex(2.0, 0.0)}}};
  for (const char* name : {"++", "--"}) {
    auto rep = restricted_gradient(k_square_instance(Variant::parse(name)), cfg);
    CHECK(rep.stationarity_residual < 1e-12);
    CHECK(rep.max_mismatch < 1e-12);
    CHECK(rep.h_components_equal);
  }
}

TEST_CASE("restricted gradient: printed variant differs by 4/w") {
  Config<Complex> cfg{{{Complex(2.0, 0.0)}}};
  for (const char* name : {"+-", "-+"}) {
    auto rep = restricted_gradient(k_square_instance(Variant::parse(name)), cfg);
    CHECK(rep.stationarity_residual < 1e-12);
    CHECK(rep.h_components_equal);
    // |4/w| = 2 at w = 2, in both the w- and z-components
    CHECK(std::abs(rep.max_w_mismatch - 2.0) < 1e-12);
    CHECK(std::abs(rep.max_z_mismatch - 2.0) < 1e-12);
  }
}

TEST_CASE("restricted gradient on a well-separated A2 instance") {
  auto rep = restricted_gradient(a2_instance(Variant::parse("++")), a2_config());
  CHECK(rep.stationarity_residual < 1e-12);
  CHECK(rep.max_mismatch < 1e-9);
  CHECK(rep.h_components_equal);
}

TEST_CASE("lagrangian defect: 1x1 case vanishes") {
  Config<Complex> cfg{{{Complex(2.0, 0.0)}}};
  auto rep = lagrangian_defect(k_square_instance(Variant::parse("+-")), cfg);
  CHECK(rep.g.size() == 1);
  CHECK(std::abs(rep.defect[0][0]) == 0.0);
  CHECK(rep.vanishes);
  CHECK(rep.fd_max_error < 1e-7);
}

TEST_CASE("lagrangian defect: closed form on A2") {
  auto cfg = a2_config();
  Complex dd = cfg.w[0][0] - cfg.w[1][0];
  for (const char* name : {"+-", "++"}) {
    auto p = a2_instance(Variant::parse(name));
    auto rep = lagrangian_defect(p, cfg);
    // entries are (-es) * (alpha_i.alpha_j / d) / (w_p - w_q)
    Complex expect = double(-p.variant.exp_sign) * (-1.0) / dd;
    CHECK(std::abs(rep.defect[0][1] - expect) < 1e-12);
    CHECK(std::abs(rep.defect[1][0] + expect) < 1e-12);
    CHECK(std::abs(rep.defect[0][0]) == 0.0);
    CHECK_FALSE(rep.vanishes);
    CHECK(rep.fd_max_error < 1e-7);
  }
}

TEST_CASE("lagrangian defect: h*-independence and translation invariance") {
  auto p = a2_instance(Variant::parse("+-"));
  auto cfg = a2_config();
  auto base = lagrangian_defect(p, cfg);

  auto shifted_h = p;
  shifted_h.h_alpha = {Complex(9.0, -3.0), Complex(-2.0, 8.0)};
  shifted_h.h_lambda = {Complex(4.0, 4.0)};
  auto rep_h = lagrangian_defect(shifted_h, cfg);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(rep_h.g[a][b] == base.g[a][b]);

  Complex t(0.83, -1.19);
  auto moved = p;
  moved.z[0] += t;
  Config<Complex> moved_cfg = cfg;
  for (auto& node : moved_cfg.w)
    for (auto& w : node) w += t;
  auto rep_t = lagrangian_defect(moved, moved_cfg);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(std::abs(rep_t.g[a][b] - base.g[a][b]) < 1e-9);
}

TEST_CASE("exponent table: A2 with empty coweight data") {
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("A2");
  p.alpha = {1, 1};
  p.h_alpha = {rq(2), rq(-3)};
  p.kappa = rq(4);
  auto table = exponent_table(p);
  REQUIRE(table.size() == 4);  // two ordered w-w pairs + two linear factors
  CHECK(table[0].kind == "w-w");
  CHECK(table[0].exponent == rq(-2));  // kappa * (alpha_1.alpha_2)/2 = 4 * (-1/2)
  CHECK(table[0].factor == "w[1,1]-w[2,1]");
  CHECK(table[1].kind == "w-w");
  CHECK(table[1].exponent == rq(-2));
  CHECK(table[1].factor == "w[2,1]-w[1,1]");
  CHECK(table[2].kind == "lin-w");
  CHECK(table[2].exponent == rq(-8));  // -kappa h_alpha[0]
  CHECK(table[3].exponent == rq(12));

  p.kappa = rq(0);
  auto zeros = exponent_table(p);
  REQUIRE(zeros.size() == 4);  // same shape, zero exponents
  for (const auto& e : zeros) CHECK(e.exponent == rq(0));
}

TEST_CASE("exponent table: same-node pairs carry alpha_i.alpha_i/2 = d_i") {
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("B2");
  p.alpha = {2, 0};
  p.h_alpha = {rq(0), rq(0)};
  p.kappa = rq(1);
  auto table = exponent_table(p);
  int ww = 0;
  for (const auto& e : table)
    if (e.kind == "w-w") {
      ++ww;
      CHECK(e.exponent == rq(2));  // d_0 = 2 on the long node
    }
  CHECK(ww == 2);
}

TEST_CASE("exponent table log-gradient equals kappa grad Phi exactly") {
  SuperParamsT<Rational> p;
  p.rs = RootSystem::named("A2");
  p.alpha = {2, 1};
  p.coweights = {Coweight{{1, 0}}, Coweight{{0, 2}}};
  p.z = {rq(5), rq(-7, 2)};
  p.h_alpha = {rq(1, 3), rq(-2)};
  p.h_lambda = {rq(4), rq(-1, 5)};
  p.kappa = rq(3, 2);
  Config<Rational> cfg{{{rq(1), rq(-1)}, {rq(2)}}};
  auto [dw, dz] = table_log_gradient(p, cfg);
  auto phi = master_phi_gradient(p, cfg);
  for (std::size_t i = 0; i < dw.size(); ++i)
    for (std::size_t r = 0; r < dw[i].size(); ++r)
      CHECK(dw[i][r] == p.kappa * phi.dw[i][r]);
  for (std::size_t n = 0; n < dz.size(); ++n) CHECK(dz[n] == p.kappa * phi.dz[n]);
}

TEST_CASE("super params validation") {
  SuperParams p;
  p.rs = RootSystem::named("A1");
  p.alpha = {1};
  p.h_alpha = {Complex(0, 0)};
  p.coweights = {Coweight{{1}}, Coweight{{1}}};
  p.z = {Complex(1, 0), Complex(1, 0)};
  p.h_lambda = {Complex(0, 0), Complex(0, 0)};
  CHECK_THROWS_AS(p.validate(), CoincidentPoints);
  p.z = {Complex(1, 0), Complex(2, 0)};
  p.coweights = {Coweight{{1}}, Coweight{{-1}}};
  CHECK_THROWS_AS(p.validate(), NonDominant);
  p.coweights = {Coweight{{1}}};
  CHECK_THROWS_AS(p.validate(), SchemaError);  // length mismatch with z
}
