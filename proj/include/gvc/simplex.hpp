#pragma once

// Dense bounded-variable two-phase primal simplex.  Small and
// deterministic: Dantzig pricing with a switch to Bland's rule after a
// run of degenerate pivots, and a fresh factorization of the final
// basis so reported values do not carry pivot drift.

#include <utility>
#include <vector>

namespace gvc {

struct SimplexRow {
  std::vector<std::pair<int, double>> terms;  // (column, coefficient)
  char op = 'L';  // 'L' <=, 'E' ==, 'G' >=
  double rhs = 0.0;
};

struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Optimal;
  std::vector<double> x;
  double objective = 0.0;  // cost'x at the returned point
  int iterations = 0;
  bool basic = true;  // always a basic solution when Optimal
};

// min cost'x  s.t. rows,  lower <= x <= upper.
// Lower bounds must be finite; upper bounds may be +inf.
SimplexResult simplex_solve(const std::vector<double>& cost,
                            const std::vector<double>& lower,
                            const std::vector<double>& upper,
                            const std::vector<SimplexRow>& rows);

}  // namespace gvc
