#pragma once

// Finite-type root data in the convention used throughout: the alpha_i are
// simple COROOTS, the checked alpha are roots, and the invariant form is
// normalized so short coroots have square length 2.  Symmetrizers
// d_i = alpha_i.alpha_i / 2 then lie in {1,2,3}, d = max d_i, and
// d_check_i = d / d_i.  The Cartan matrix is stored as
// a[i][j] = <alpha_j, alpha-check_i> = alpha_i.alpha_j / d_i.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zastava/errors.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

struct Coweight {
  std::vector<long> pairings;  // <lambda, alpha-check_i> per node

  bool dominant() const {
    for (long p : pairings)
      if (p < 0) return false;
    return true;
  }
  friend bool operator==(const Coweight& a, const Coweight& b) {
    return a.pairings == b.pairings;
  }
};

class RootSystem {
 public:
  // "A1", "A2", ..., "B2", "C3", "D4", "E6".."E8", "F4", "G2"
  static std::shared_ptr<const RootSystem> named(const std::string& name);
  // validates: integer entries, 2 on the diagonal, nonpositive off-diagonal,
  // symmetrizable, positive definite (finite type)
  static std::shared_ptr<const RootSystem> from_cartan(std::vector<std::vector<long>> a);

  int rank() const { return int(a_.size()); }
  long cartan(int i, int j) const { return a_[i][j]; }         // <alpha_j, alpha-check_i>
  const std::vector<std::vector<long>>& cartan_matrix() const { return a_; }
  long d(int i) const { return d_[i]; }                        // alpha_i.alpha_i / 2
  long d_max() const { return dmax_; }
  Rational d_check(int i) const { return make_rational(dmax_, d_[i]); }
  bool simply_laced() const { return dmax_ == 1; }
  const std::string& name() const { return name_; }            // "" for custom input

  long root_dot_root(int i, int j) const { return d_[i] * a_[i][j]; }  // alpha_i.alpha_j
  long root_dot_coweight(int i, const Coweight& lam) const;            // alpha_i.lambda
  Rational coweight_dot_coweight(const Coweight& lam, const Coweight& mu) const;

 private:
  std::vector<std::vector<long>> a_;
  std::vector<long> d_;
  long dmax_ = 1;
  std::string name_;

  void validate_and_symmetrize();
  std::vector<Rational> coroot_coords(const Coweight& lam) const;  // solve A x = pairings
};

// Colored divisors on the affine line: multiset of (point, color) with colors
// indexing the nodes; this is the target of the factorization map pi_alpha.
template <class K>
struct ColoredDivisor {
  // entries kept sorted by (color, sort_key(point)) so serialization is canonical
  std::vector<std::pair<K, int>> entries;

  void canonicalize() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const std::pair<K, int>& a, const std::pair<K, int>& b) {
                       if (a.second != b.second) return a.second < b.second;
                       return scalar_traits<K>::sort_key(a.first) <
                              scalar_traits<K>::sort_key(b.first);
                     });
  }

  std::vector<long> degree_per_color(int rank) const {
    std::vector<long> deg(rank, 0);
    for (const auto& [pt, color] : entries) {
      if (color < 0 || color >= rank)
        throw SchemaError("divisor color out of range: " + std::to_string(color));
      ++deg[color];
    }
    return deg;
  }

  friend ColoredDivisor divisor_union(const ColoredDivisor& a, const ColoredDivisor& b) {
    ColoredDivisor out;
    out.entries = a.entries;
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    out.canonicalize();
    return out;
  }

  // supports are compared as point sets, colors ignored
  friend bool disjoint_support(const ColoredDivisor& a, const ColoredDivisor& b) {
    for (const auto& [pa, ca] : a.entries)
      for (const auto& [pb, cb] : b.entries)
        if (pa == pb) return false;
    return true;
  }

  friend bool operator==(const ColoredDivisor& a, const ColoredDivisor& b) {
    return a.entries == b.entries;
  }
};

}  // namespace zastava
