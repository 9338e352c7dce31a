#pragma once

// Exact rational functions in the chart generators {w_{i,r}, y_{i,r}} with
// rational coefficients.  A ChartSession fixes the variable universe for one
// (root system, alpha) pair; expressions from different sessions never mix.
// Equality is decided by cross-multiplication, so no multivariate gcd is
// needed; normalization only cancels common monomial factors and rescales.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zastava/errors.hpp"
#include "zastava/rootdata.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

// the corrupted variant deliberately breaks Jacobi; used as a negative control
enum class BracketTable { standard, corrupted_test_fixture };

class ChartSession {
 public:
  ChartSession(std::shared_ptr<const RootSystem> rs, std::vector<long> alpha,
               BracketTable table = BracketTable::standard);

  const RootSystem& rs() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& rs_ptr() const { return rs_; }
  const std::vector<long>& alpha() const { return alpha_; }
  BracketTable table() const { return table_; }

  int num_points() const { return m_; }
  int num_vars() const { return 2 * m_; }
  int point_index(int node, int r) const;
  int w_var(int node, int r) const { return point_index(node, r); }
  int y_var(int node, int r) const { return m_ + point_index(node, r); }
  bool is_w(int v) const { return v < m_; }
  std::pair<int, int> location(int v) const;  // (node, r) of a w- or y-variable
  std::string var_name(int v) const;          // "w[i,r]" / "y[i,r]", 1-based

  friend bool compatible(const ChartSession& a, const ChartSession& b) {
    return a.rs_->cartan_matrix() == b.rs_->cartan_matrix() && a.alpha_ == b.alpha_ &&
           a.table_ == b.table_;
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<long> alpha_;
  std::vector<int> offset_;
  int m_ = 0;
  BracketTable table_;
};

using SessionPtr = std::shared_ptr<const ChartSession>;

struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rational> terms;  // exponent vector -> nonzero coefficient

  static MultiPoly zero(int nvars);
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int v);

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& mono, const Rational& c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }

  MultiPoly derivative(int v) const;
  std::vector<int> min_exponents() const;          // elementwise min over monomials
  MultiPoly shift_down(const std::vector<int>& e) const;  // divide by the monomial x^e
  Rational leading_coefficient() const;            // of the map-order-last monomial

  template <class K>
  K eval(const std::vector<K>& vals) const {
    K acc = scalar_traits<K>::zero();
    for (const auto& [mono, coef] : terms) {
      K t = scalar_traits<K>::from_rational(coef);
      for (int v = 0; v < nvars; ++v)
        for (int e = 0; e < mono[v]; ++e) t = t * vals[v];
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string(const ChartSession& s) const;
};

class ChartExpr {
 public:
  static ChartExpr constant(SessionPtr s, const Rational& c);
  static ChartExpr w(SessionPtr s, int node, int r);
  static ChartExpr y(SessionPtr s, int node, int r);
  static ChartExpr var(SessionPtr s, int v);
  static ChartExpr from_parts(SessionPtr s, MultiPoly num, MultiPoly den);

  const SessionPtr& session() const { return session_; }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend ChartExpr operator+(const ChartExpr& a, const ChartExpr& b);
  friend ChartExpr operator-(const ChartExpr& a, const ChartExpr& b);
  friend ChartExpr operator-(const ChartExpr& a);
  friend ChartExpr operator*(const ChartExpr& a, const ChartExpr& b);
  friend ChartExpr operator/(const ChartExpr& a, const ChartExpr& b);
  friend ChartExpr operator*(const Rational& c, const ChartExpr& a);
  ChartExpr pow(long e) const;  // negative e inverts
  ChartExpr derivative(int v) const;

  // equality by cross-multiplication: a.num*b.den == b.num*a.den
  friend bool operator==(const ChartExpr& a, const ChartExpr& b);
  friend bool operator!=(const ChartExpr& a, const ChartExpr& b) { return !(a == b); }

  template <class K>
  K eval(const std::vector<K>& vals) const {
    K d = den_.eval(vals);
    if (kz(d)) throw ZeroDivision("ChartExpr::eval: denominator vanishes at the point");
    return num_.eval(vals) / d;
  }

  std::string to_string() const;

 private:
  ChartExpr(SessionPtr s, MultiPoly num, MultiPoly den);
  void reduce();

  SessionPtr session_;
  MultiPoly num_, den_;
};

const SessionPtr& require_same_session(const ChartExpr& a, const ChartExpr& b);

}  // namespace zastava
