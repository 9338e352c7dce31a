#pragma once

// Numeric root finding (Aberth-Ehrlich, deterministic seeding) and the
// continued-fraction rationalizer used to pull exact roots back out of the
// numeric hints.  Exact callers always verify candidates by substitution, so
// the rationalizer only has to be good, not provably correct.

#include <cmath>
#include <optional>
#include <vector>

#include "zastava/poly.hpp"

namespace zastava {

struct RootOptions {
  double eps = 1e-12;   // relative residual bound per root
  int max_iter = 400;
};

namespace detail {

inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace detail

// All roots of q (with multiplicity as clusters), sorted by (re, im).
// Residual acceptance: |q(z)| <= eps * max|coeff| * max(1, |z|)^deg.
template <class K>
std::vector<Complex> roots_numeric(const Poly<K>& q, const RootOptions& opt = {}) {
  if (q.is_zero()) throw ZeroDivision("roots_numeric: zero polynomial");
  const int n = q.degree();
  std::vector<Complex> c(n + 1);
  double coeff_scale = 0.0;
  for (int k = 0; k <= n; ++k) {
    c[k] = scalar_traits<K>::to_complex(q.coeff(k));
    coeff_scale = std::max(coeff_scale, std::abs(c[k]));
  }
  if (n == 0) return {};
  std::vector<Complex> m(c);  // monic copy drives the iteration
  for (auto& v : m) v /= c[n];
  double radius = 1.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, 1.0 + std::abs(m[k]));

  // deterministic perturbed-circle seeds; golden-ratio offsets break the
  // conjugate symmetry that can stall real-coefficient inputs
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    double frac = 0.61803398874989485 * double(k + 1);
    frac -= std::floor(frac);
    double theta = 2.0 * M_PI * (double(k) + 0.26 + 0.5 * frac) / double(n);
    z[k] = radius * Complex{std::cos(theta), std::sin(theta)};
  }

  std::vector<Complex> mp(n);  // derivative of the monic copy
  for (int k = 1; k <= n; ++k) mp[k - 1] = double(k) * m[k];

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex pv = detail::horner(m, z[k]);
      Complex dv = detail::horner(mp, z[k]);
      if (std::abs(dv) == 0.0) {  // sit exactly on a critical point: nudge
        z[k] += Complex{1e-8 * radius, 1e-8 * radius};
        worst = 1.0;
        continue;
      }
      Complex newt = pv / dv;
      Complex sum{0.0, 0.0};
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      Complex denom = 1.0 - newt * sum;
      Complex step = (std::abs(denom) == 0.0) ? newt : newt / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-16) break;
  }

  double worst_resid = 0.0;
  for (int k = 0; k < n; ++k) {
    double scale = coeff_scale * std::pow(std::max(1.0, std::abs(z[k])), n);
    worst_resid = std::max(worst_resid, std::abs(detail::horner(c, z[k])) / scale);
  }
  if (worst_resid > opt.eps)
    throw ConvergenceFailure("roots_numeric: residual " + std::to_string(worst_resid) +
                             " exceeds eps " + std::to_string(opt.eps));

  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

// Best continued-fraction convergent p/q with q <= max_den close to x.
// Callers must verify exactness themselves.
inline std::optional<Rational> rationalize(double x, unsigned long max_den = 100000000UL) {
  if (!std::isfinite(x)) return std::nullopt;
  mpz_class p0 = 1, q0 = 0;  // convergents p_{-1}/q_{-1}, p_0/q_0
  mpz_class p1, q1 = 1;
  double rem = x;
  p1 = mpz_class(std::floor(rem));
  rem -= std::floor(rem);
  for (int step = 0; step < 64; ++step) {
    double approx = mpq_class(p1, q1).get_d();
    if (std::abs(approx - x) <= 1e-12 * std::max(1.0, std::abs(x))) break;
    if (rem == 0.0) break;
    rem = 1.0 / rem;
    if (!std::isfinite(rem) || std::abs(rem) > 1e18) break;
    mpz_class a(std::floor(rem));
    rem -= std::floor(rem);
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > mpz_class(max_den)) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  if (q1 == 0) return std::nullopt;
  Rational out(p1, q1);
  out.canonicalize();
  if (std::abs(out.get_d() - x) > 1e-9 * std::max(1.0, std::abs(x))) return std::nullopt;
  return out;
}

}  // namespace zastava
