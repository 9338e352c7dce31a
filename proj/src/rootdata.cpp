#include "zastava/rootdata.hpp"

#include <algorithm>
#include <cctype>

namespace zastava {

namespace {

// exact positive-definiteness via Gaussian elimination: all pivots positive
bool positive_definite(std::vector<std::vector<Rational>> m) {
  const int n = int(m.size());
  for (int k = 0; k < n; ++k) {
    if (sgn(m[k][k]) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace

void RootSystem::validate_and_symmetrize() {
  const int n = rank();
  if (n == 0) throw InvalidCartan("empty Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (int(a_[i].size()) != n) throw InvalidCartan("Cartan matrix is not square");
    if (a_[i][i] != 2) throw InvalidCartan("diagonal entry != 2 at node " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (i != j && a_[i][j] > 0)
        throw InvalidCartan("positive off-diagonal entry at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw InvalidCartan("zero pattern not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    }
  }

  // Find rational symmetrizers by propagating d_j = d_i a_ij / a_ji along
  // edges, then scale each connected component so its minimum is 1 (short
  // coroots have square length 2).
  std::vector<Rational> dr(n, Rational(0));
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    dr[start] = 1;
    seen[start] = true;
    std::vector<int> stack{start}, members;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (i == j || a_[i][j] == 0) continue;
        Rational implied = dr[i] * Rational(a_[i][j]) / Rational(a_[j][i]);
        if (!seen[j]) {
          seen[j] = true;
          dr[j] = implied;
          stack.push_back(j);
        } else if (dr[j] != implied) {
          throw InvalidCartan("matrix is not symmetrizable");
        }
      }
    }
    Rational lo = dr[members.front()];
    for (int i : members) lo = std::min(lo, dr[i]);
    for (int i : members) dr[i] /= lo;
  }

  d_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (dr[i].get_den() != 1)
      throw InvalidCartan("symmetrizers are not integral after normalization");
    d_[i] = dr[i].get_num().get_si();
    if (d_[i] <= 0) throw InvalidCartan("nonpositive symmetrizer");
  }
  dmax_ = *std::max_element(d_.begin(), d_.end());

  std::vector<std::vector<Rational>> sym(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (d_[i] * a_[i][j] != d_[j] * a_[j][i]) throw InvalidCartan("symmetrization failed");
      sym[i][j] = Rational(d_[i] * a_[i][j]);
    }
  if (!positive_definite(std::move(sym)))
    throw InvalidCartan("symmetrized matrix is not positive definite (not finite type)");
}

std::shared_ptr<const RootSystem> RootSystem::from_cartan(std::vector<std::vector<long>> a) {
  auto rs = std::make_shared<RootSystem>();
  rs->a_ = std::move(a);
  rs->validate_and_symmetrize();
  return rs;
}

std::shared_ptr<const RootSystem> RootSystem::named(const std::string& name) {
  auto bad = [&]() -> std::shared_ptr<const RootSystem> {
    throw InvalidCartan("unknown root system name '" + name + "'");
  };
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0]))) return bad();
  char family = char(std::toupper(static_cast<unsigned char>(name[0])));
  int n = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return bad();
    n = n * 10 + (name[k] - '0');
    if (n > 64) throw InvalidCartan("rank out of range in '" + name + "'");
  }
  if (n <= 0) return bad();

  auto chain = [&](int len) {
    std::vector<std::vector<long>> a(len, std::vector<long>(len, 0));
    for (int i = 0; i < len; ++i) {
      a[i][i] = 2;
      if (i + 1 < len) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };

  std::vector<std::vector<long>> a;
  switch (family) {
    case 'A':
      a = chain(n);
      break;
    case 'B':  // long coroots first: d = (2,...,2,1)
      if (n < 2) return bad();
      a = chain(n);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // short coroots first: d = (1,...,1,2)
      if (n < 2) return bad();
      a = chain(n);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) return bad();
      a = chain(n - 1);
      for (auto& row : a) row.push_back(0);
      a.emplace_back(n, 0);
      a[n - 1][n - 1] = 2;
      a[n - 1][n - 3] = a[n - 3][n - 1] = -1;  // fork at the (n-3)rd node
      break;
    case 'E': {
      if (n < 6 || n > 8) return bad();
      // chain 0-2-3-...-(n-1) with node 1 attached to node 3
      a.assign(n, std::vector<long>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (n != 4) return bad();
      a = chain(4);
      a[1][2] = -2;  // d = (1,1,2,2)
      break;
    case 'G':
      if (n != 2) return bad();
      a = {{2, -1}, {-3, 2}};  // d = (3,1): node 0 carries the long coroot
      break;
    default:
      return bad();
  }
  auto rs = from_cartan(std::move(a));
  const_cast<RootSystem&>(*rs).name_ = std::string(1, family) + std::to_string(n);
  return rs;
}

std::vector<Rational> RootSystem::coroot_coords(const Coweight& lam) const {
  const int n = rank();
  if (int(lam.pairings.size()) != n)
    throw SchemaError("coweight has " + std::to_string(lam.pairings.size()) +
                      " pairings, expected " + std::to_string(n));
  // solve A x = p exactly (lambda = sum x_j alpha_j in the coroot basis)
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(a_[i][j]);
    m[i][n] = Rational(lam.pairings[i]);
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (sgn(m[r][k]) != 0) { piv = r; break; }
    if (piv < 0) throw InvalidCartan("singular Cartan matrix");  // cannot happen: finite type
    std::swap(m[k], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == k || sgn(m[r][k]) == 0) continue;
      Rational f = m[r][k] / m[k][k];
      for (int c = k; c <= n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  std::vector<Rational> x(n);
  for (int k = 0; k < n; ++k) x[k] = m[k][n] / m[k][k];
  return x;
}

long RootSystem::root_dot_coweight(int i, const Coweight& lam) const {
  if (int(lam.pairings.size()) != rank())
    throw SchemaError("coweight rank mismatch");
  return d_[i] * lam.pairings[i];
}

Rational RootSystem::coweight_dot_coweight(const Coweight& lam, const Coweight& mu) const {
  std::vector<Rational> x = coroot_coords(lam);
  Rational acc(0);
  for (int j = 0; j < rank(); ++j) acc += x[j] * Rational(d_[j] * mu.pairings[j]);
  return acc;
}

}  // namespace zastava
