#pragma once

// Ext-pairing / Whittaker-type functions on the chart: the rank-2 extension
// class over A1 (computed two independent ways), the chi pairings against
// per-node polynomials K_i, and the Kronecker-Hankel resultant identities
// relating the two Laurent tails R/Q and D/Q.

#include <string>
#include <vector>

#include "zastava/point.hpp"

namespace zastava {

template <class K>
struct ExtClass {
  int a = 0;
  std::vector<K> c;  // c_0 .. c_{2a-2}
  friend bool operator==(const ExtClass& x, const ExtClass& y) { return x.a == y.a && x.c == y.c; }
};

enum class ExtRoute { closed_form, bezout_oracle };
enum class ChiSide { plus, minus };

namespace detail {

// Over A1 with squarefree Q, gcd(Q,R) != 1 is equivalent to some y_r = 0, so
// the coprimality check doubles as the regular-locus check and boundary
// points surface as NonCoprime.
template <class K>
SL2Map<K> coprime_map_a1(const ZastavaPoint<K>& p, const char* who) {
  if (p.rank() != 1) throw ChartInvalid(std::string(who) + ": requires a rank-1 root system");
  SL2Map<K> m = to_map(p);
  if (m.q.degree() > 0 && !m.based())
    throw NonCoprime(std::string(who) + ": gcd(Q,R) != 1 (boundary point)");
  return m;
}

}  // namespace detail

// the class of the induced extension: c_k = sum_r w_r^k / (y_r Q'(w_r)),
// or equivalently the Laurent tail of D/Q where R D - Q F = 1
template <class K>
ExtClass<K> ext_class(const ZastavaPoint<K>& p, ExtRoute route) {
  static_assert(scalar_traits<K>::is_exact, "ext_class is an exact-domain computation");
  SL2Map<K> m = detail::coprime_map_a1(p, "ext_class");
  const int a = m.q.degree();
  ExtClass<K> out{a, {}};
  if (a == 0) return out;
  if (route == ExtRoute::closed_form) {
    Poly<K> qd = m.q.derivative();
    out.c.assign(2 * a - 1, scalar_traits<K>::zero());
    for (const auto& wy : p.node(0)) {
      K weight = scalar_traits<K>::inverse(wy.y * qd(wy.w));
      K wpow = scalar_traits<K>::one();
      for (int k = 0; k <= 2 * a - 2; ++k) {
        out.c[k] = out.c[k] + wpow * weight;
        wpow = wpow * wy.w;
      }
    }
  } else {
    BezoutPair<K> bz = bezout_pair(m.r, m.q);
    // certify the defining identity before trusting the series
    if (m.r * bz.d - m.q * bz.f != Poly<K>::constant(scalar_traits<K>::one()))
      throw NonCoprime("ext_class: Bezout identity failed to certify");
    out.c = series_at_infinity(bz.d, m.q, 2 * a - 2).c;
  }
  return out;
}

// chi_+ = sum_{i,r} y^{-1} prod_{j!=i} Q_j(w)^{-cartan(i,j)} K_i(w) / Q'_i(w)
// chi_- = sum_{i,r} y K_i(w) / Q'_i(w)          (the involution transport)
template <class K>
K chi_pairing(const ZastavaPoint<K>& p, const std::vector<Poly<K>>& ks, ChiSide side) {
  if (int(ks.size()) != p.rank())
    throw SchemaError("chi_pairing: need one K polynomial per node");
  for (int i = 0; i < p.rank(); ++i)
    for (const auto& wy : p.node(i))
      if (kz(wy.y)) throw RegularLocusViolation("chi_pairing: zero y coordinate");
  if (p.has_cross_node_coincidence())
    throw RegularLocusViolation("chi_pairing: cross-node coincidence");
  auto qs = q_polys(p);
  K acc = scalar_traits<K>::zero();
  for (int i = 0; i < p.rank(); ++i) {
    Poly<K> qd = qs[i].derivative();
    for (const auto& wy : p.node(i)) {
      K term = ks[i](wy.w) / qd(wy.w);
      if (side == ChiSide::plus) {
        term = term / wy.y;
        for (int j = 0; j < p.rank(); ++j) {
          if (j == i || p.rs()->cartan(i, j) == 0) continue;
          term = term * detail::int_power(qs[j](wy.w), -p.rs()->cartan(i, j));
        }
      } else {
        term = term * wy.y;
      }
      acc = acc + term;
    }
  }
  return acc;
}

template <class K>
struct KroneckerReport {
  int a = 0;
  LaurentTail<K> c_tilde;  // tail of R/Q
  LaurentTail<K> c;        // tail of D/Q
  K det_tilde, det_l, resultant_value;
  K sigma;            // det_tilde / resultant
  K unit_product;     // det_tilde * det_l
  long sigma_expected;  // (-1)^{a(a-1)/2}, the proved sign
  bool tail_routes_agree;       // series(R/Q) vs the closed-form Lagrange sums
  bool resultant_routes_agree;  // prod_r y_r vs the Sylvester determinant
};

template <class K>
KroneckerReport<K> kronecker_check(const ZastavaPoint<K>& p) {
  static_assert(scalar_traits<K>::is_exact, "kronecker_check is an exact-domain computation");
  SL2Map<K> m = detail::coprime_map_a1(p, "kronecker_check");
  const int a = m.q.degree();
  if (a == 0) throw InsufficientCoefficients("kronecker_check: empty point");

  KroneckerReport<K> rep;
  rep.a = a;
  rep.c_tilde = series_at_infinity(m.r, m.q, 2 * a - 2);
  // independent route: Lagrange closed form c~_k = sum_r w^k y_r / Q'(w_r)
  Poly<K> qd = m.q.derivative();
  std::vector<K> lagrange(2 * a - 1, scalar_traits<K>::zero());
  for (const auto& wy : p.node(0)) {
    K weight = wy.y / qd(wy.w);
    K wpow = scalar_traits<K>::one();
    for (int k = 0; k <= 2 * a - 2; ++k) {
      lagrange[k] = lagrange[k] + wpow * weight;
      wpow = wpow * wy.w;
    }
  }
  rep.tail_routes_agree = (lagrange == rep.c_tilde.c);

  BezoutPair<K> bz = bezout_pair(m.r, m.q);
  rep.c = series_at_infinity(bz.d, m.q, 2 * a - 2);
  rep.det_tilde = hankel_det(rep.c_tilde, a);
  rep.det_l = hankel_det(rep.c, a);

  rep.resultant_value = scalar_traits<K>::one();
  for (const auto& wy : p.node(0)) rep.resultant_value = rep.resultant_value * wy.y;
  rep.resultant_routes_agree = (rep.resultant_value == resultant(m.q, m.r));

  rep.sigma = rep.det_tilde / rep.resultant_value;
  rep.unit_product = rep.det_tilde * rep.det_l;
  rep.sigma_expected = ((a * (a - 1) / 2) % 2 == 0) ? 1 : -1;
  return rep;
}

// det L: its vanishing cuts out the locus where the induced bundle is nontrivial
template <class K>
K hankel_split_locus(const ZastavaPoint<K>& p) {
  static_assert(scalar_traits<K>::is_exact, "hankel_split_locus is an exact-domain computation");
  ExtClass<K> e = ext_class(p, ExtRoute::closed_form);
  LaurentTail<K> tail{e.c};
  return hankel_det(tail, e.a);
}

}  // namespace zastava
