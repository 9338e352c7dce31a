#pragma once

// Points of the open zastava in the etale (w, y) chart, per-node lists of
// (w_{i,r}, y_{i,r}) attached to a root system: q_polys, the SL2 map carrier
// (to_map / from_map), derived coordinate systems (eta, ybar^2, log s),
// factorization glue, the Cartan involution, the boundary function F^2, the
// colored-divisor map pi_alpha, and the per-node SL2 projections.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zastava/poly.hpp"
#include "zastava/rootdata.hpp"
#include "zastava/roots.hpp"

namespace zastava {

template <class K>
struct WY {
  K w, y;
  friend bool operator==(const WY& a, const WY& b) { return a.w == b.w && a.y == b.y; }
};

// comparison used for canonical per-node ordering: exact on exact domains
template <class K>
bool scalar_less(const K& a, const K& b) {
  if constexpr (std::is_same_v<K, Rational>) {
    return a < b;
  } else if constexpr (std::is_same_v<K, GaussianRational>) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  } else {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  }
}

template <class K>
struct SL2Map {
  Poly<K> q, r;  // monic Q, remainder-degree R; the based map is R/Q

  // gcd(Q, R) = 1; only meaningful on exact domains
  bool based() const {
    static_assert(scalar_traits<K>::is_exact, "based() needs an exact domain");
    if (q.degree() == 0) return true;
    if (r.is_zero()) return false;
    return poly_gcd(q, r).degree() == 0;
  }
};

template <class K>
class ZastavaPoint {
 public:
  ZastavaPoint(std::shared_ptr<const RootSystem> rs, std::vector<std::vector<WY<K>>> nodes)
      : rs_(std::move(rs)), nodes_(std::move(nodes)) {
    if (int(nodes_.size()) != rs_->rank())
      throw ChartInvalid("point has " + std::to_string(nodes_.size()) + " nodes, root system has " +
                         std::to_string(rs_->rank()));
    for (auto& node : nodes_)
      std::sort(node.begin(), node.end(),
                [](const WY<K>& a, const WY<K>& b) { return scalar_less(a.w, b.w); });
    for (int i = 0; i < rs_->rank(); ++i)
      for (std::size_t r = 0; r + 1 < nodes_[i].size(); ++r)
        if (nodes_[i][r].w == nodes_[i][r + 1].w)
          throw ChartInvalid("repeated w within node " + std::to_string(i));
  }

  static ZastavaPoint empty(std::shared_ptr<const RootSystem> rs) {
    std::vector<std::vector<WY<K>>> nodes(rs->rank());
    return ZastavaPoint(std::move(rs), std::move(nodes));
  }

  const std::shared_ptr<const RootSystem>& rs() const { return rs_; }
  int rank() const { return rs_->rank(); }
  const std::vector<std::vector<WY<K>>>& nodes() const { return nodes_; }
  const std::vector<WY<K>>& node(int i) const { return nodes_.at(i); }

  std::vector<long> alpha() const {
    std::vector<long> a(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) a[i] = long(nodes_[i].size());
    return a;
  }
  long total_degree() const {
    long t = 0;
    for (const auto& node : nodes_) t += long(node.size());
    return t;
  }

  // regular locus: all y nonzero and all w pairwise distinct across nodes
  bool is_regular() const {
    for (const auto& node : nodes_)
      for (const auto& wy : node)
        if (kz(wy.y)) return false;
    return !has_cross_node_coincidence();
  }
  bool has_cross_node_coincidence() const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = i + 1; j < nodes_.size(); ++j)
        for (const auto& a : nodes_[i])
          for (const auto& b : nodes_[j])
            if (a.w == b.w) return true;
    return false;
  }

  friend bool operator==(const ZastavaPoint& a, const ZastavaPoint& b) {
    return a.rs_ == b.rs_ ? a.nodes_ == b.nodes_
                          : (a.rs_->cartan_matrix() == b.rs_->cartan_matrix() && a.nodes_ == b.nodes_);
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::vector<WY<K>>> nodes_;
};

// --- basic chart data -------------------------------------------------------

template <class K>
std::vector<Poly<K>> q_polys(const ZastavaPoint<K>& p) {
  std::vector<Poly<K>> qs;
  qs.reserve(p.rank());
  for (const auto& node : p.nodes()) {
    std::vector<K> roots;
    roots.reserve(node.size());
    for (const auto& wy : node) roots.push_back(wy.w);
    qs.push_back(Poly<K>::from_roots(roots));
  }
  return qs;
}

template <class K>
SL2Map<K> to_map(const ZastavaPoint<K>& p) {
  if (p.rank() != 1) throw ChartInvalid("to_map requires a rank-1 root system");
  std::vector<std::pair<K, K>> samples;
  for (const auto& wy : p.node(0)) samples.emplace_back(wy.w, wy.y);
  return SL2Map<K>{q_polys(p)[0], interpolate(samples)};
}

namespace detail {

template <class K>
void check_map_shape(const SL2Map<K>& m) {
  if (m.q.is_zero() || !m.q.is_monic()) throw ChartInvalid("from_map: Q must be monic");
  if (!m.r.is_zero() && m.r.degree() >= m.q.degree())
    throw ImproperFraction("from_map: requires deg R < deg Q");
}

}  // namespace detail

// Exact inverse of to_map: requires Q to split over the scalar domain.
// Numeric hints from Aberth are rationalized and then certified exactly.
template <class K>
ZastavaPoint<K> from_map(const SL2Map<K>& m) {
  static_assert(scalar_traits<K>::is_exact, "use from_map_numeric for the numeric domain");
  detail::check_map_shape(m);
  auto rs = RootSystem::named("A1");
  const int a = m.q.degree();
  if (a == 0) return ZastavaPoint<K>::empty(rs);
  if (poly_gcd(m.q, m.q.derivative()).degree() > 0)
    throw RepeatedRoot("from_map: Q has repeated roots");

  std::vector<Complex> hints = roots_numeric(m.q);
  std::vector<K> roots;
  for (Complex z : hints) {
    double scale = 1.0 + std::abs(z);
    if constexpr (std::is_same_v<K, Rational>) {
      if (std::abs(z.imag()) > 1e-7 * scale)
        throw NonSplitting("from_map: Q has a non-real root near " +
                           std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
      auto cand = rationalize(z.real());
      if (!cand) throw NonSplitting("from_map: could not rationalize root");
      roots.push_back(*cand);
    } else {  // GaussianRational
      auto re = rationalize(z.real()), im = rationalize(z.imag());
      if (!re || !im) throw NonSplitting("from_map: could not rationalize root");
      roots.push_back(K{*re, *im});
    }
  }
  // one certificate covers root correctness, distinctness and completeness
  if (Poly<K>::from_roots(roots) != m.q)
    throw NonSplitting("from_map: Q does not split over " +
                       std::string(scalar_traits<K>::domain_name));
  std::vector<WY<K>> node;
  for (const K& w : roots) node.push_back({w, m.r(w)});
  return ZastavaPoint<K>(rs, {node});
}

template <class K>
ZastavaPoint<Complex> from_map_numeric(const SL2Map<K>& m, const RootOptions& opt = {},
                                       double sep_eps = 1e-8) {
  detail::check_map_shape(m);
  auto rs = RootSystem::named("A1");
  if (m.q.degree() == 0) return ZastavaPoint<Complex>::empty(rs);
  std::vector<Complex> roots = roots_numeric(m.q, opt);
  double scale = 1.0;
  for (Complex z : roots) scale = std::max(scale, std::abs(z));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= sep_eps * scale)
        throw RepeatedRoot("from_map_numeric: roots not simple to tolerance");
  std::vector<Complex> rc(m.r.coeffs().size());
  for (std::size_t k = 0; k < rc.size(); ++k) rc[k] = scalar_traits<K>::to_complex(m.r.coeffs()[k]);
  Poly<Complex> rr(rc);
  std::vector<WY<Complex>> node;
  for (Complex w : roots) node.push_back({w, rr(w)});
  return ZastavaPoint<Complex>(rs, {node});
}

// --- derived coordinate systems ----------------------------------------------

template <class K>
struct DerivedCoords {
  std::vector<std::vector<K>> eta;      // y / Q'_i(w), the factorization residues
  std::vector<std::vector<K>> ybar_sq;  // y^2 prod_{j != i} Q_j^{a_ij}(w), single-valued
  std::vector<std::vector<Complex>> s;  // principal-branch log of ybar
};

namespace detail {

// value^e for integer e, inverting on demand
template <class K>
K int_power(const K& v, long e) {
  if (e == 0) return scalar_traits<K>::one();
  K base = e > 0 ? v : scalar_traits<K>::inverse(v);
  K acc = scalar_traits<K>::one();
  for (long k = 0; k < (e > 0 ? e : -e); ++k) acc = acc * base;
  return acc;
}

}  // namespace detail

template <class K>
DerivedCoords<K> derived_coords(const ZastavaPoint<K>& p) {
  const auto& rs = *p.rs();
  auto qs = q_polys(p);
  DerivedCoords<K> out;
  out.eta.resize(p.rank());
  out.ybar_sq.resize(p.rank());
  out.s.resize(p.rank());
  for (int i = 0; i < p.rank(); ++i) {
    Poly<K> dq = qs[i].derivative();
    for (std::size_t r = 0; r < p.node(i).size(); ++r) {
      const auto& wy = p.node(i)[r];
      if (kz(wy.y))
        throw RegularLocusViolation("zero y at (" + std::to_string(i) + "," + std::to_string(r) +
                                    ")");
      out.eta[i].push_back(wy.y / dq(wy.w));
      K ysq = wy.y * wy.y;
      Complex s_val = std::log(scalar_traits<K>::to_complex(wy.y));
      for (int j = 0; j < p.rank(); ++j) {
        if (j == i || rs.cartan(i, j) == 0) continue;
        K qj = qs[j](wy.w);
        if (kz(qj))
          throw RegularLocusViolation("coincidence (" + std::to_string(i) + "," +
                                      std::to_string(r) + ") with node " + std::to_string(j));
        ysq = ysq * detail::int_power(qj, rs.cartan(i, j));
        s_val += 0.5 * double(rs.cartan(i, j)) * std::log(scalar_traits<K>::to_complex(qj));
      }
      out.ybar_sq[i].push_back(ysq);
      out.s[i].push_back(s_val);
    }
  }
  return out;
}

// --- factorization -------------------------------------------------------------

template <class K>
ZastavaPoint<K> glue(const ZastavaPoint<K>& p, const ZastavaPoint<K>& q) {
  if (p.rs()->cartan_matrix() != q.rs()->cartan_matrix())
    throw SessionMismatch("glue: points live over different root systems");
  for (const auto& pn : p.nodes())
    for (const auto& a : pn)
      for (const auto& qn : q.nodes())
        for (const auto& b : qn)
          if (a.w == b.w)
            throw DisjointnessViolation("glue: shared support point");
  auto qp = q_polys(p), qq = q_polys(q);
  std::vector<std::vector<WY<K>>> nodes(p.rank());
  for (int i = 0; i < p.rank(); ++i) {
    for (const auto& wy : p.node(i)) nodes[i].push_back({wy.w, wy.y * qq[i](wy.w)});
    for (const auto& wy : q.node(i)) nodes[i].push_back({wy.w, wy.y * qp[i](wy.w)});
  }
  return ZastavaPoint<K>(p.rs(), std::move(nodes));
}

// --- Cartan involution ----------------------------------------------------------

template <class K>
ZastavaPoint<K> involution(const ZastavaPoint<K>& p) {
  const auto& rs = *p.rs();
  auto qs = q_polys(p);
  std::vector<std::vector<WY<K>>> nodes(p.rank());
  for (int i = 0; i < p.rank(); ++i) {
    for (std::size_t r = 0; r < p.node(i).size(); ++r) {
      const auto& wy = p.node(i)[r];
      if (kz(wy.y))
        throw RegularLocusViolation("involution: zero y at (" + std::to_string(i) + "," +
                                    std::to_string(r) + ")");
      K ynew = scalar_traits<K>::inverse(wy.y);
      for (int j = 0; j < p.rank(); ++j) {
        if (j == i || rs.cartan(i, j) == 0) continue;
        K qj = qs[j](wy.w);
        if (kz(qj))
          throw RegularLocusViolation("involution: coincidence (" + std::to_string(i) + "," +
                                      std::to_string(r) + ") with node " + std::to_string(j));
        ynew = ynew * detail::int_power(qj, -rs.cartan(i, j));
      }
      nodes[i].push_back({wy.w, ynew});
    }
  }
  return ZastavaPoint<K>(p.rs(), std::move(nodes));
}

// --- boundary function -----------------------------------------------------------

// F^2 = prod_{i,r} y^{2 d_i} prod_{j != i} Q_j(w_{i,r})^{alpha_i . alpha_j}
// (the constant c_alpha is normalized to 1)
template <class K>
K boundary_sq(const ZastavaPoint<K>& p) {
  const auto& rs = *p.rs();
  auto qs = q_polys(p);
  // a negative-exponent coincidence is a pole regardless of any zero y factors
  for (int i = 0; i < p.rank(); ++i)
    for (const auto& wy : p.node(i))
      for (int j = 0; j < p.rank(); ++j) {
        if (j == i || rs.root_dot_root(i, j) >= 0) continue;
        if (kz(qs[j](wy.w)))
          throw PoleAtCoincidence("boundary_sq: w of node " + std::to_string(i) +
                                  " meets node " + std::to_string(j));
      }
  K f = scalar_traits<K>::one();
  for (int i = 0; i < p.rank(); ++i)
    for (const auto& wy : p.node(i)) {
      f = f * detail::int_power(wy.y, 2 * rs.d(i));
      for (int j = 0; j < p.rank(); ++j) {
        if (j == i || rs.cartan(i, j) == 0) continue;
        f = f * detail::int_power(qs[j](wy.w), rs.root_dot_root(i, j));
      }
    }
  return f;
}

// principal-branch F itself (branch-dependent; F^2 always matches boundary_sq)
template <class K>
Complex boundary_numeric(const ZastavaPoint<K>& p) {
  const auto& rs = *p.rs();
  auto qs = q_polys(p);
  Complex f{1.0, 0.0};
  for (int i = 0; i < p.rank(); ++i)
    for (const auto& wy : p.node(i)) {
      Complex y = scalar_traits<K>::to_complex(wy.y);
      for (long t = 0; t < rs.d(i); ++t) f *= y;  // integer power: exact at y = 0
      for (int j = 0; j < p.rank(); ++j) {
        if (j == i || rs.cartan(i, j) == 0) continue;
        Complex qj = scalar_traits<K>::to_complex(qs[j](wy.w));
        if (qj == Complex{0.0, 0.0})
          throw PoleAtCoincidence("boundary_numeric: coincidence between nodes " +
                                  std::to_string(i) + "," + std::to_string(j));
        f *= std::exp(0.5 * double(rs.root_dot_root(i, j)) * std::log(qj));
      }
    }
  return f;
}

// --- colored divisor and projections ------------------------------------------------

template <class K>
ColoredDivisor<K> pi_alpha(const ZastavaPoint<K>& p) {
  ColoredDivisor<K> d;
  for (int i = 0; i < p.rank(); ++i)
    for (const auto& wy : p.node(i)) d.entries.emplace_back(wy.w, i);
  d.canonicalize();
  return d;
}

template <class K>
ZastavaPoint<K> sl2_projection(const ZastavaPoint<K>& p, int i) {
  if (i < 0 || i >= p.rank()) throw SchemaError("sl2_projection: node out of range");
  return ZastavaPoint<K>(RootSystem::named("A1"), {p.node(i)});
}

// --- the B2 fixture of the boundary casework -----------------------------------------

template <class K>
struct B2PluckerReport {
  K a1, a2, b01, b12, b02, b03;
  bool quadric1, quadric2, quadric3;
  K boundary_value;  // -b03
  bool all_hold() const { return quadric1 && quadric2 && quadric3; }
};

template <class K>
B2PluckerReport<K> verify_b2_plucker(const K& w_i, const K& w_j, const K& y_i, const K& y_j) {
  if (w_i == w_j) throw CoincidentPoints("verify_b2_plucker: w_i = w_j");
  B2PluckerReport<K> rep;
  rep.a1 = -w_i;
  rep.a2 = -w_j;
  rep.b01 = y_i;
  rep.b12 = y_j;
  K delta = rep.a1 - rep.a2;
  rep.b02 = rep.b01 * rep.b12 / delta;
  rep.b03 = rep.b01 * rep.b02 / delta;
  rep.quadric1 = (rep.b02 * delta == rep.b01 * rep.b12);
  rep.quadric2 = (rep.b03 * delta == rep.b01 * rep.b02);
  rep.quadric3 = (rep.b02 * rep.b02 == rep.b12 * rep.b03);
  rep.boundary_value = -rep.b03;
  return rep;
}

}  // namespace zastava
