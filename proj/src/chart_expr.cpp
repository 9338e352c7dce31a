#include "zastava/chart_expr.hpp"

#include <algorithm>

namespace zastava {

// --- ChartSession ----------------------------------------------------------

ChartSession::ChartSession(std::shared_ptr<const RootSystem> rs, std::vector<long> alpha,
                           BracketTable table)
    : rs_(std::move(rs)), alpha_(std::move(alpha)), table_(table) {
  if (int(alpha_.size()) != rs_->rank())
    throw SchemaError("alpha has " + std::to_string(alpha_.size()) + " entries, rank is " +
                      std::to_string(rs_->rank()));
  offset_.resize(alpha_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i] < 0) throw SchemaError("negative alpha coefficient");
    offset_[i] = m_;
    m_ += int(alpha_[i]);
  }
}

int ChartSession::point_index(int node, int r) const {
  if (node < 0 || node >= int(alpha_.size()) || r < 0 || r >= alpha_[node])
    throw SchemaError("chart variable (" + std::to_string(node) + "," + std::to_string(r) +
                      ") out of range");
  return offset_[node] + r;
}

std::pair<int, int> ChartSession::location(int v) const {
  int p = v % m_;
  for (int i = int(alpha_.size()) - 1; i >= 0; --i)
    if (p >= offset_[i]) return {i, p - offset_[i]};
  throw SchemaError("variable index out of range");
}

std::string ChartSession::var_name(int v) const {
  auto [i, r] = location(v);
  return std::string(is_w(v) ? "w" : "y") + "[" + std::to_string(i + 1) + "," +
         std::to_string(r + 1) + "]";
}

// --- MultiPoly ---------------------------------------------------------------

MultiPoly MultiPoly::zero(int nvars) { return MultiPoly{nvars, {}}; }

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p{nvars, {}};
  if (sgn(c) != 0) p.terms.emplace(std::vector<int>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int v) {
  MultiPoly p{nvars, {}};
  std::vector<int> mono(nvars, 0);
  mono[v] = 1;
  p.terms.emplace(std::move(mono), Rational(1));
  return p;
}

void MultiPoly::add_term(const std::vector<int>& mono, const Rational& c) {
  auto it = terms.find(mono);
  if (it == terms.end()) {
    if (sgn(c) != 0) terms.emplace(mono, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [mono, c] : b.terms) out.add_term(mono, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [mono, c] : b.terms) out.add_term(mono, -c);
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out{a.nvars, {}};
  for (const auto& [mono, c] : a.terms) out.terms.emplace(mono, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out{a.nvars, {}};
  std::vector<int> mono(a.nvars);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      for (int v = 0; v < a.nvars; ++v) mono[v] = ma[v] + mb[v];
      out.add_term(mono, ca * cb);
    }
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly out{a.nvars, {}};
  if (sgn(c) == 0) return out;
  for (const auto& [mono, k] : a.terms) out.terms.emplace(mono, c * k);
  return out;
}

MultiPoly MultiPoly::derivative(int v) const {
  MultiPoly out{nvars, {}};
  for (const auto& [mono, c] : terms) {
    if (mono[v] == 0) continue;
    std::vector<int> m = mono;
    Rational k = c * Rational(m[v]);
    m[v] -= 1;
    out.add_term(m, k);
  }
  return out;
}

std::vector<int> MultiPoly::min_exponents() const {
  if (terms.empty()) return std::vector<int>(nvars, 0);
  std::vector<int> e = terms.begin()->first;
  for (const auto& [mono, c] : terms)
    for (int v = 0; v < nvars; ++v) e[v] = std::min(e[v], mono[v]);
  return e;
}

MultiPoly MultiPoly::shift_down(const std::vector<int>& e) const {
  MultiPoly out{nvars, {}};
  for (const auto& [mono, c] : terms) {
    std::vector<int> m = mono;
    for (int v = 0; v < nvars; ++v) m[v] -= e[v];
    out.terms.emplace(std::move(m), c);
  }
  return out;
}

Rational MultiPoly::leading_coefficient() const {
  if (terms.empty()) return Rational(0);
  return terms.rbegin()->second;
}

std::string MultiPoly::to_string(const ChartSession& s) const {
  if (terms.empty()) return "0";
  std::string out;
  // map-order descending so the leading monomial (normalized to coefficient
  // with positive sign convention of the stored value) prints first
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [mono, c] = *it;
    Rational abs_c = sgn(c) < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string factors;
    for (int v = 0; v < nvars; ++v) {
      if (mono[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += s.var_name(v);
      if (mono[v] > 1) factors += "^" + std::to_string(mono[v]);
    }
    bool coef_is_one = (abs_c == 1);
    if (factors.empty()) {
      out += rational_to_string(abs_c);
    } else if (coef_is_one) {
      out += factors;
    } else {
      out += rational_to_string(abs_c) + "*" + factors;
    }
  }
  return out;
}

// --- ChartExpr ----------------------------------------------------------------

ChartExpr::ChartExpr(SessionPtr s, MultiPoly num, MultiPoly den)
    : session_(std::move(s)), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivision("ChartExpr with zero denominator");
  reduce();
}

void ChartExpr::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(den_.nvars, Rational(1));
    return;
  }
  // cancel the common monomial factor of numerator and denominator
  std::vector<int> en = num_.min_exponents(), ed = den_.min_exponents(), g(en.size());
  bool nontrivial = false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    g[v] = std::min(en[v], ed[v]);
    nontrivial |= g[v] > 0;
  }
  if (nontrivial) {
    num_ = num_.shift_down(g);
    den_ = den_.shift_down(g);
  }
  // scale so the denominator's leading coefficient is 1 (deterministic form)
  Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

ChartExpr ChartExpr::constant(SessionPtr s, const Rational& c) {
  int n = s->num_vars();
  return ChartExpr(std::move(s), MultiPoly::constant(n, c), MultiPoly::constant(n, Rational(1)));
}

ChartExpr ChartExpr::var(SessionPtr s, int v) {
  int n = s->num_vars();
  return ChartExpr(std::move(s), MultiPoly::variable(n, v), MultiPoly::constant(n, Rational(1)));
}

ChartExpr ChartExpr::w(SessionPtr s, int node, int r) { return var(s, s->w_var(node, r)); }
ChartExpr ChartExpr::y(SessionPtr s, int node, int r) { return var(s, s->y_var(node, r)); }

ChartExpr ChartExpr::from_parts(SessionPtr s, MultiPoly num, MultiPoly den) {
  return ChartExpr(std::move(s), std::move(num), std::move(den));
}

const SessionPtr& require_same_session(const ChartExpr& a, const ChartExpr& b) {
  if (a.session() != b.session() && !compatible(*a.session(), *b.session()))
    throw SessionMismatch("chart expressions come from incompatible sessions");
  return a.session();
}

ChartExpr operator+(const ChartExpr& a, const ChartExpr& b) {
  auto s = require_same_session(a, b);
  return ChartExpr(s, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ChartExpr operator-(const ChartExpr& a, const ChartExpr& b) {
  auto s = require_same_session(a, b);
  return ChartExpr(s, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ChartExpr operator-(const ChartExpr& a) { return ChartExpr(a.session_, -a.num_, a.den_); }

ChartExpr operator*(const ChartExpr& a, const ChartExpr& b) {
  auto s = require_same_session(a, b);
  return ChartExpr(s, a.num_ * b.num_, a.den_ * b.den_);
}

ChartExpr operator*(const Rational& c, const ChartExpr& a) {
  return ChartExpr(a.session_, c * a.num_, a.den_);
}

ChartExpr operator/(const ChartExpr& a, const ChartExpr& b) {
  auto s = require_same_session(a, b);
  if (b.is_zero()) throw ZeroDivision("ChartExpr division by zero");
  return ChartExpr(s, a.num_ * b.den_, a.den_ * b.num_);
}

ChartExpr ChartExpr::pow(long e) const {
  ChartExpr acc = constant(session_, Rational(1));
  if (e >= 0) {
    for (long k = 0; k < e; ++k) acc = acc * *this;
  } else {
    if (is_zero()) throw ZeroDivision("ChartExpr: negative power of zero");
    ChartExpr inv(session_, den_, num_);
    for (long k = 0; k < -e; ++k) acc = acc * inv;
  }
  return acc;
}

ChartExpr ChartExpr::derivative(int v) const {
  // quotient rule: (n'd - nd') / d^2
  return ChartExpr(session_, num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

bool operator==(const ChartExpr& a, const ChartExpr& b) {
  require_same_session(a, b);
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ChartExpr::to_string() const {
  std::string n = num_.to_string(*session_);
  std::vector<int> unit(num_.nvars, 0);
  bool den_is_one = den_.terms.size() == 1 && den_.terms.begin()->first == unit &&
                    den_.terms.begin()->second == 1;
  if (den_is_one) return n;
  return "(" + n + ") / (" + den_.to_string(*session_) + ")";
}

}  // namespace zastava
