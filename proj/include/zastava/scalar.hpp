#pragma once

// Scalar domains underlying every coordinate chart: exact rationals (GMP),
// exact complex rationals Q(i), and numeric complex doubles.  All higher
// layers are templated over the scalar type K and query scalar_traits<K>
// for the few operations whose meaning depends on the domain.

#include <gmpxx.h>

#include <complex>
#include <cstdlib>
#include <string>
#include <utility>

#include "zastava/errors.hpp"

namespace zastava {

using Rational = mpq_class;
using Complex = std::complex<double>;

// --- canonical "p/q" strings -------------------------------------------

// Canonical form: "p/q" with q > 0 and gcd(|p|, q) = 1; integers are still
// printed with the "/1" suffix so output is uniform.
inline std::string rational_to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Accepts "p" or "p/q" with optional leading '-'; rejects empty parts,
// stray characters and zero denominators.
inline Rational parse_rational(const std::string& s) {
  auto fail = [&] { throw SchemaError("not a rational literal: '" + s + "'"); };
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den)) fail();
  Rational x{mpz_class(num), mpz_class(den)};
  if (x.get_den() == 0) throw SchemaError("zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

// mpq_class(n, d) stores the fraction uncanonicalized, and GMP's comparisons
// assume canonical form; always build ratios through this helper
inline Rational make_rational(long num, long den) {
  if (den == 0) throw ZeroDivision("rational with zero denominator");
  Rational x{num, den};
  x.canonicalize();
  return x;
}

// --- exact complex rationals Q(i) ---------------------------------------

struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int n) : re(n), im(0) {}  // NOLINT

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (sgn(n) == 0) throw ZeroDivision("division by zero in Q(i)");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// --- traits --------------------------------------------------------------

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* domain_name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_long(long n) { return Rational(n); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inverse(const Rational& x) {
    if (is_zero(x)) throw ZeroDivision("inverse of zero rational");
    return Rational(1) / x;
  }
  static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
  static std::pair<double, double> sort_key(const Rational& x) { return {x.get_d(), 0.0}; }
  static std::string to_string(const Rational& x) { return rational_to_string(x); }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool is_exact = true;
  static constexpr const char* domain_name = "exact-complex";
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1), Rational(0)}; }
  static GaussianRational from_long(long n) { return {Rational(n), Rational(0)}; }
  static GaussianRational from_rational(const Rational& q) { return {q, Rational(0)}; }
  static bool is_zero(const GaussianRational& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
  static GaussianRational inverse(const GaussianRational& x) {
    return GaussianRational(1) / x;
  }
  static Complex to_complex(const GaussianRational& x) { return {x.re.get_d(), x.im.get_d()}; }
  static std::pair<double, double> sort_key(const GaussianRational& x) {
    return {x.re.get_d(), x.im.get_d()};
  }
  static std::string to_string(const GaussianRational& x) {
    return rational_to_string(x.re) + (sgn(x.im) >= 0 ? "+" : "") + rational_to_string(x.im) + "i";
  }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool is_exact = false;
  static constexpr const char* domain_name = "numeric-complex";
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_long(long n) { return {double(n), 0.0}; }
  static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static bool is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static Complex inverse(const Complex& x) {
    if (is_zero(x)) throw ZeroDivision("inverse of zero complex");
    return 1.0 / x;
  }
  static Complex to_complex(const Complex& x) { return x; }
  static std::pair<double, double> sort_key(const Complex& x) { return {x.real(), x.imag()}; }
  static std::string to_string(const Complex& x) {
    return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
  }
};

template <class K>
inline bool kz(const K& x) {  // shorthand used all over the polynomial layer
  return scalar_traits<K>::is_zero(x);
}

template <class K>
inline double abs_complex(const K& x) {
  return std::abs(scalar_traits<K>::to_complex(x));
}

}  // namespace zastava
