#pragma once

// Textual chart expressions, e.g. `y[1,1]^2 * (w[1,1]-w[2,1])^-1`.
// Indices in the syntax are 1-based; sessions supply the variable universe.

#include <string>

#include "zastava/chart_expr.hpp"

namespace zastava {

ChartExpr parse_chart_expr(const std::string& text, const SessionPtr& session);

}  // namespace zastava
