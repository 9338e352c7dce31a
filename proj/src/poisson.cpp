#include "zastava/poisson.hpp"

namespace zastava {

namespace {

// generator-pair bracket {var a, var b} for a < b cases handled by callers
ChartExpr pi_w_y(const SessionPtr& s, int node, int r) {
  ChartExpr y = ChartExpr::y(s, node, r);
  ChartExpr entry = s->rs().d_check(node) * y;
  if (s->table() == BracketTable::corrupted_test_fixture && node == 0 && r == 0)
    entry = entry * y;  // {w,y} = d-check y^2: breaks Jacobi, keeps antisymmetry
  return entry;
}

ChartExpr pi_y_y(const SessionPtr& s, int ni, int ri, int nj, int rj) {
  const RootSystem& rs = s->rs();
  // d * (alpha-check_i . alpha-check_j) = d * alpha_i.alpha_j / (d_i d_j)
  Rational coef = make_rational(rs.d_max() * rs.root_dot_root(ni, nj), rs.d(ni) * rs.d(nj));
  ChartExpr num = coef * (ChartExpr::y(s, ni, ri) * ChartExpr::y(s, nj, rj));
  ChartExpr dw = ChartExpr::w(s, ni, ri) - ChartExpr::w(s, nj, rj);
  return num / dw;
}

}  // namespace

ChartExpr bracket(const ChartExpr& f, const ChartExpr& g) {
  SessionPtr s = require_same_session(f, g);
  const int m = s->num_points();
  std::vector<ChartExpr> df, dg;
  df.reserve(2 * m);
  dg.reserve(2 * m);
  for (int v = 0; v < 2 * m; ++v) {
    df.push_back(f.derivative(v));
    dg.push_back(g.derivative(v));
  }
  auto wedge = [&](int a, int b) { return df[a] * dg[b] - df[b] * dg[a]; };

  ChartExpr acc = ChartExpr::constant(s, Rational(0));
  const int rank = s->rs().rank();
  for (int i = 0; i < rank; ++i)
    for (int r = 0; r < s->alpha()[i]; ++r) {
      int a = s->w_var(i, r), b = s->y_var(i, r);
      ChartExpr t = wedge(a, b);
      if (!t.is_zero()) acc = acc + t * pi_w_y(s, i, r);
    }
  for (int i = 0; i < rank; ++i)
    for (int r = 0; r < s->alpha()[i]; ++r)
      for (int j = i + 1; j < rank; ++j) {
        if (s->rs().cartan(i, j) == 0) continue;  // orthogonal nodes commute
        for (int t2 = 0; t2 < s->alpha()[j]; ++t2) {
          int a = s->y_var(i, r), b = s->y_var(j, t2);
          ChartExpr t = wedge(a, b);
          if (!t.is_zero()) acc = acc + t * pi_y_y(s, i, r, j, t2);
        }
      }
  return acc;
}

ChartExpr q_poly_at(const SessionPtr& s, int j, int i, int r) {
  ChartExpr acc = ChartExpr::constant(s, Rational(1));
  ChartExpr wi = ChartExpr::w(s, i, r);
  for (int t = 0; t < s->alpha()[j]; ++t) acc = acc * (wi - ChartExpr::w(s, j, t));
  return acc;
}

ChartExpr ybar_sq_expr(const SessionPtr& s, int i, int r) {
  ChartExpr acc = ChartExpr::y(s, i, r).pow(2);
  for (int j = 0; j < s->rs().rank(); ++j) {
    if (j == i || s->rs().cartan(i, j) == 0) continue;
    acc = acc * q_poly_at(s, j, i, r).pow(s->rs().cartan(i, j));
  }
  return acc;
}

ChartExpr boundary_sq_expr(const SessionPtr& s) {
  ChartExpr acc = ChartExpr::constant(s, Rational(1));
  for (int i = 0; i < s->rs().rank(); ++i)
    for (int r = 0; r < s->alpha()[i]; ++r) {
      acc = acc * ChartExpr::y(s, i, r).pow(2 * s->rs().d(i));
      for (int j = 0; j < s->rs().rank(); ++j) {
        if (j == i || s->rs().cartan(i, j) == 0) continue;
        acc = acc * q_poly_at(s, j, i, r).pow(s->rs().root_dot_root(i, j));
      }
    }
  return acc;
}

std::vector<IdentityReport> jacobi_check(const SessionPtr& s) {
  const int n = s->num_vars();
  std::vector<ChartExpr> gen;
  gen.reserve(n);
  for (int v = 0; v < n; ++v) gen.push_back(ChartExpr::var(s, v));
  std::vector<IdentityReport> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        ChartExpr j = bracket(gen[a], bracket(gen[b], gen[c])) +
                      bracket(gen[b], bracket(gen[c], gen[a])) +
                      bracket(gen[c], bracket(gen[a], gen[b]));
        bool ok = j.is_zero();
        out.push_back({"jacobi(" + s->var_name(a) + "," + s->var_name(b) + "," + s->var_name(c) +
                           ")",
                       ok, ok ? "0" : j.to_string()});
      }
  return out;
}

std::vector<IdentityReport> verify_log_canonical(const SessionPtr& s) {
  const int rank = s->rs().rank();
  std::vector<std::vector<ChartExpr>> ybar(rank);
  for (int i = 0; i < rank; ++i)
    for (int r = 0; r < s->alpha()[i]; ++r) ybar[i].push_back(ybar_sq_expr(s, i, r));

  std::vector<IdentityReport> out;
  auto name = [&](const char* kind, int i, int r) {
    return std::string(kind) + "[" + std::to_string(i + 1) + "," + std::to_string(r + 1) + "]";
  };
  for (int i = 0; i < rank; ++i)
    for (int r = 0; r < s->alpha()[i]; ++r)
      for (int j = 0; j < rank; ++j)
        for (int t = 0; t < s->alpha()[j]; ++t) {
          ChartExpr lhs = bracket(ChartExpr::w(s, i, r), ybar[j][t]);
          ChartExpr rhs = (i == j && r == t)
                              ? Rational(2) * (s->rs().d_check(i) * ybar[j][t])
                              : ChartExpr::constant(s, Rational(0));
          ChartExpr res = lhs - rhs;
          bool ok = res.is_zero();
          out.push_back({"{" + name("w", i, r) + ", ybar_sq" + name("", j, t) + "} = " +
                             (i == j && r == t ? "2*dv*ybar_sq" : "0"),
                         ok, ok ? "0" : res.to_string()});
        }
  // all ybar^2 pairs commute
  std::vector<std::pair<int, int>> flat;
  for (int i = 0; i < rank; ++i)
    for (int r = 0; r < s->alpha()[i]; ++r) flat.emplace_back(i, r);
  for (std::size_t a = 0; a < flat.size(); ++a)
    for (std::size_t b = a + 1; b < flat.size(); ++b) {
      ChartExpr res = bracket(ybar[flat[a].first][flat[a].second], ybar[flat[b].first][flat[b].second]);
      bool ok = res.is_zero();
      out.push_back({"{ybar_sq" + name("", flat[a].first, flat[a].second) + ", ybar_sq" +
                         name("", flat[b].first, flat[b].second) + "} = 0",
                     ok, ok ? "0" : res.to_string()});
    }
  return out;
}

std::vector<IdentityReport> g2_regularity_chain() {
  auto s = std::make_shared<const ChartSession>(RootSystem::named("G2"), std::vector<long>{1, 1});
  // node 0 carries the long coroot (d = 3): the "i" of the casework
  ChartExpr yi = ChartExpr::y(s, 0, 0), yj = ChartExpr::y(s, 1, 0);
  ChartExpr dw = ChartExpr::w(s, 0, 0) - ChartExpr::w(s, 1, 0);

  std::vector<IdentityReport> out;
  auto push = [&](const std::string& label, const ChartExpr& lhs, const ChartExpr& rhs) {
    ChartExpr res = lhs - rhs;
    bool ok = res.is_zero();
    out.push_back({label, ok, ok ? "0" : res.to_string()});
  };
  push("{y_i, y_j} = -3 y_i y_j/(w_i-w_j)", bracket(yi, yj),
       Rational(-3) * (yi * yj / dw));
  push("{y_i, y_i y_j/(w_i-w_j)} = -2 y_i^2 y_j/(w_i-w_j)^2", bracket(yi, yi * yj / dw),
       Rational(-2) * (yi.pow(2) * yj / dw.pow(2)));
  push("{y_i, y_i^2 y_j/(w_i-w_j)^2} = -y_i^3 y_j/(w_i-w_j)^3",
       bracket(yi, yi.pow(2) * yj / dw.pow(2)), Rational(-1) * (yi.pow(3) * yj / dw.pow(3)));
  return out;
}

std::vector<IdentityReport> boundary_homogeneity(const SessionPtr& s) {
  ChartExpr fsq = boundary_sq_expr(s);
  ChartExpr rhs = Rational(2 * s->rs().d_max()) * fsq;
  std::vector<IdentityReport> out;
  for (int j = 0; j < s->rs().rank(); ++j)
    for (int t = 0; t < s->alpha()[j]; ++t) {
      ChartExpr res = bracket(ChartExpr::w(s, j, t), fsq) - rhs;
      bool ok = res.is_zero();
      out.push_back({"{w[" + std::to_string(j + 1) + "," + std::to_string(t + 1) +
                         "], F^2} = 2d F^2",
                     ok, ok ? "0" : res.to_string()});
    }
  return out;
}

}  // namespace zastava
