#pragma once

// Dense univariate polynomials over a field K, plus the handful of exact
// algorithms the coordinate charts are built on: division, gcd, Newton
// interpolation, Sylvester resultants (fraction-free Bareiss determinant for
// exact K, pivoted LU for numeric), the Bezout pair R*D - Q*F = 1, Laurent
// expansion of proper fractions at infinity, and Hankel determinants of such
// tails.

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "zastava/errors.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
  static Poly monomial(int deg, const K& v) {
    std::vector<K> c(deg + 1, scalar_traits<K>::zero());
    c[deg] = v;
    return Poly(std::move(c));
  }
  // monic product of (z - w) over the given roots
  static Poly from_roots(const std::vector<K>& roots) {
    Poly p = constant(scalar_traits<K>::one());
    for (const K& w : roots) p = p * Poly{-w, scalar_traits<K>::one()};
    return p;
  }

  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == scalar_traits<K>::one(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int k) const {
    return (k >= 0 && k < int(c_.size())) ? c_[k] : scalar_traits<K>::zero();
  }
  K leading() const { return c_.empty() ? scalar_traits<K>::zero() : c_.back(); }

  K operator()(const K& x) const {  // Horner
    K acc = scalar_traits<K>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<K> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * scalar_traits<K>::from_long(long(k));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), scalar_traits<K>::zero());
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = c[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] + b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), scalar_traits<K>::zero());
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = c[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] - b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<K> c(a.c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, scalar_traits<K>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const K& s, const Poly& a) {
    std::vector<K> c(a.c_);
    for (auto& v : c) v = s * v;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const K& s) { return s * a; }
  friend Poly operator/(const Poly& a, const K& s) { return scalar_traits<K>::inverse(s) * a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
    if (a.degree() < b.degree()) return {zero(), a};
    std::vector<K> rem = a.c_;
    std::vector<K> quo(a.degree() - b.degree() + 1, scalar_traits<K>::zero());
    K inv_lead = scalar_traits<K>::inverse(b.leading());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      K q = rem[k + b.degree()] * inv_lead;
      quo[k] = q;
      if (kz(q)) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[k + j] = rem[k + j] - q * b.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) throw ZeroDivision("monic() of zero polynomial");
    return *this / leading();
  }

  Poly pow(int e) const {
    Poly acc = constant(scalar_traits<K>::one());
    for (int k = 0; k < e; ++k) acc = acc * *this;
    return acc;
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && kz(c_.back())) c_.pop_back();
  }
};

// monic gcd via the Euclidean algorithm (exact domains; numerically unstable
// over doubles, deliberately not offered there)
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  static_assert(scalar_traits<K>::is_exact, "gcd requires an exact domain");
  while (!b.is_zero()) {
    auto [q, r] = Poly<K>::divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// --- dense determinants ---------------------------------------------------

namespace detail {

// Bareiss fraction-free elimination: every division is exact, so this is the
// determinant of choice over Q and Q(i).
template <class K>
K det_bareiss(std::vector<std::vector<K>> m) {
  const int n = int(m.size());
  if (n == 0) return scalar_traits<K>::one();
  int sign = 1;
  K prev = scalar_traits<K>::one();
  for (int k = 0; k + 1 < n; ++k) {
    if (kz(m[k][k])) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!kz(m[r][k])) { piv = r; break; }
      if (piv < 0) return scalar_traits<K>::zero();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = scalar_traits<K>::zero();
    }
    prev = m[k][k];
  }
  K det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// partially pivoted LU for the numeric domain
inline Complex det_lu(std::vector<std::vector<Complex>> m) {
  const int n = int(m.size());
  if (n == 0) return {1.0, 0.0};
  Complex det{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m[k][k]);
    for (int r = k + 1; r < n; ++r)
      if (std::abs(m[r][k]) > best) { best = std::abs(m[r][k]); piv = r; }
    if (best == 0.0) return {0.0, 0.0};
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (int r = k + 1; r < n; ++r) {
      Complex f = m[r][k] / m[k][k];
      for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

template <class K>
K det(std::vector<std::vector<K>> m) {
  if constexpr (scalar_traits<K>::is_exact) {
    return det_bareiss(std::move(m));
  } else {
    return det_lu(std::move(m));
  }
}

}  // namespace detail

// --- Newton interpolation --------------------------------------------------

// unique polynomial of degree < n through n nodes (x_k, f_k); duplicate
// abscissae are rejected up front
template <class K>
Poly<K> interpolate(const std::vector<std::pair<K, K>>& nodes) {
  const int n = int(nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (nodes[i].first == nodes[j].first)
        throw DuplicateNode("interpolate: repeated abscissa at positions " + std::to_string(i) +
                            "," + std::to_string(j));
  if (n == 0) return Poly<K>::zero();
  // divided differences, updated in place
  std::vector<K> dd(n);
  for (int i = 0; i < n; ++i) dd[i] = nodes[i].second;
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i].first - nodes[i - level].first);
  Poly<K> p = Poly<K>::constant(dd[n - 1]);
  for (int i = n - 2; i >= 0; --i)
    p = p * Poly<K>{-nodes[i].first, scalar_traits<K>::one()} + Poly<K>::constant(dd[i]);
  return p;
}

// --- resultant via the Sylvester matrix ------------------------------------

template <class K>
K resultant(const Poly<K>& q, const Poly<K>& r) {
  if (q.is_zero()) throw ZeroDivision("resultant: first argument must be nonzero");
  const int dq = q.degree();
  if (r.is_zero()) {
    // Res(Q, 0) vanishes unless Q is a nonzero constant (empty root set)
    return dq > 0 ? scalar_traits<K>::zero() : scalar_traits<K>::one();
  }
  const int dr = r.degree();
  if (dq == 0 && dr == 0) return scalar_traits<K>::one();
  const int n = dq + dr;
  std::vector<std::vector<K>> syl(n, std::vector<K>(n, scalar_traits<K>::zero()));
  for (int row = 0; row < dr; ++row)      // dr shifted copies of Q
    for (int k = 0; k <= dq; ++k) syl[row][row + k] = q.coeff(dq - k);
  for (int row = 0; row < dq; ++row)      // dq shifted copies of R
    for (int k = 0; k <= dr; ++k) syl[dr + row][row + k] = r.coeff(dr - k);
  return detail::det(std::move(syl));
}

// --- Bezout pair ------------------------------------------------------------

// the unique (D, F) with R*D - Q*F = 1, deg D <= deg Q - 1, deg F <= deg Q - 2
template <class K>
struct BezoutPair {
  Poly<K> d, f;
};

template <class K>
BezoutPair<K> bezout_pair(const Poly<K>& r, const Poly<K>& q) {
  static_assert(scalar_traits<K>::is_exact, "bezout_pair requires an exact domain");
  if (q.degree() < 1) throw ImproperFraction("bezout_pair: deg Q must be >= 1");
  if (r.degree() >= q.degree())
    throw ImproperFraction("bezout_pair: requires deg R < deg Q");
  // extended Euclid on (r, q): maintain s_a*r + t_a*q = a
  Poly<K> a = r, b = q;
  Poly<K> sa = Poly<K>::constant(scalar_traits<K>::one()), sb = Poly<K>::zero();
  Poly<K> ta = Poly<K>::zero(), tb = Poly<K>::constant(scalar_traits<K>::one());
  while (!b.is_zero()) {
    auto [quo, rem] = Poly<K>::divmod(a, b);
    Poly<K> sn = sa - quo * sb, tn = ta - quo * tb;
    a = std::move(b);      b = std::move(rem);
    sa = std::move(sb);    sb = std::move(sn);
    ta = std::move(tb);    tb = std::move(tn);
  }
  if (a.degree() != 0)
    throw NonCoprime("bezout_pair: gcd(R, Q) has degree " + std::to_string(a.degree()));
  K inv = scalar_traits<K>::inverse(a.coeff(0));
  BezoutPair<K> out{sa * inv, -(ta * inv)};
  // the degree bounds are structural; check them rather than trust the loop
  if (out.d.degree() > q.degree() - 1 || out.f.degree() > q.degree() - 2)
    throw NonCoprime("bezout_pair: degree bounds violated (non-reduced input?)");
  return out;
}

// --- Laurent tails at infinity ----------------------------------------------

// coefficients c_0..c_N of N(z)/D(z) = sum_k c_k z^{-k-1} for a proper fraction
template <class K>
struct LaurentTail {
  std::vector<K> c;
  int order() const { return int(c.size()) - 1; }
};

template <class K>
LaurentTail<K> series_at_infinity(const Poly<K>& num, const Poly<K>& den, int order) {
  if (den.is_zero()) throw ZeroDivision("series_at_infinity: zero denominator");
  if (!num.is_zero() && num.degree() >= den.degree())
    throw ImproperFraction("series_at_infinity: requires deg num < deg den");
  const int n = den.degree();
  K inv_lead = scalar_traits<K>::inverse(den.leading());
  LaurentTail<K> tail;
  tail.c.resize(order + 1, scalar_traits<K>::zero());
  // recurrence from matching coefficients of num = den * sum c_k z^{-k-1}
  for (int k = 0; k <= order; ++k) {
    K acc = num.coeff(n - 1 - k);
    for (int m = 0; m < k; ++m) acc = acc - den.coeff(n - k + m) * tail.c[m];
    tail.c[k] = acc * inv_lead;
  }
  return tail;
}

// --- Hankel determinants -----------------------------------------------------

// det of the a-by-a Hankel matrix H[i][j] = c_{i+j}; needs c_0..c_{2a-2}
template <class K>
K hankel_det(const LaurentTail<K>& tail, int a) {
  if (a <= 0) return scalar_traits<K>::one();
  if (int(tail.c.size()) < 2 * a - 1)
    throw InsufficientCoefficients("hankel_det: need " + std::to_string(2 * a - 1) +
                                   " coefficients, have " + std::to_string(tail.c.size()));
  std::vector<std::vector<K>> h(a, std::vector<K>(a));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) h[i][j] = tail.c[i + j];
  return detail::det(std::move(h));
}

}  // namespace zastava
