#pragma once

// The Poisson bracket on the chart, generated by the table
//   {w_{i,r}, w_{j,s}} = 0
//   {w_{i,r}, y_{j,s}} = d-check_i delta_ij delta_rs y_{j,s}
//   {y_{i,r}, y_{j,s}} = d (alpha-check_i . alpha-check_j) y y / (w - w),  i != j
//   {y_{i,r}, y_{i,s}} = 0
// extended to rational expressions by bilinearity and Leibniz.  Verifiers:
// Jacobi on generator triples, the log-canonical identities for ybar^2, the
// G2 regularity chain, and the boundary-function homogeneity.

#include <memory>
#include <string>
#include <vector>

#include "zastava/chart_expr.hpp"

namespace zastava {

ChartExpr bracket(const ChartExpr& f, const ChartExpr& g);

struct IdentityReport {
  std::string identity;
  bool holds;
  std::string residue;  // canonical expression string; "0" when the identity holds
};

/// Q_j evaluated at w_{i,r}: the product over s of (w_{i,r} - w_{j,s})
ChartExpr q_poly_at(const SessionPtr& s, int j, int i, int r);

// ybar^2_{i,r} = y^2 prod_{j != i} Q_j(w_{i,r})^{cartan(i,j)}
ChartExpr ybar_sq_expr(const SessionPtr& s, int i, int r);

// F^2 = prod_{i,r} y^{2 d_i} prod_{j != i} Q_j(w_{i,r})^{alpha_i . alpha_j}
ChartExpr boundary_sq_expr(const SessionPtr& s);

// Jacobi cyclic sum on every unordered triple of distinct generators
std::vector<IdentityReport> jacobi_check(const SessionPtr& s);

// {w, ybar^2} = 2 d-check delta ybar^2 and {ybar^2, ybar^2} = 0
std::vector<IdentityReport> verify_log_canonical(const SessionPtr& s);

// the three regularity identities of the G2 boundary casework
std::vector<IdentityReport> g2_regularity_chain();

// {w_{j,s}, F^2} = 2 d F^2 for every (j,s)
std::vector<IdentityReport> boundary_homogeneity(const SessionPtr& s);

}  // namespace zastava
