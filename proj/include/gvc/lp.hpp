#pragma once

// LP/IP formulation builder and relaxation solver.  One model per
// problem kind; edge variables y (both endpoints), z (no endpoint) and
// r (exactly one endpoint) appear only where the kind needs them.
// Infinite weights are materialized as Big-M objective coefficients,
// and only the full three-field formulation accepts them.

#include <iosfwd>
#include <string>

#include "gvc/instance.hpp"
#include "gvc/simplex.hpp"

namespace gvc {

struct LpModel {
  ProblemKind formulation = ProblemKind::GVC;
  bool maximize = false;
  int n = 0;
  int m = 0;
  std::vector<double> obj;
  std::vector<double> lower, upper;
  std::vector<std::string> names;
  std::vector<SimplexRow> rows;
  double constant = 0.0;  // added to the raw objective when reporting

  std::vector<int> xVar;  // vertex -> column
  std::vector<int> yVar;  // edge -> column, -1 when absent
  std::vector<int> zVar;
  std::vector<int> rVar;
};

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Optimal;
  std::vector<double> values;
  double raw = 0.0;       // objective in the model's own sense
  double reported = 0.0;  // raw + constant
  int iterations = 0;
  bool basic = true;
};

LpModel build(const GvcInstance& inst, ProblemKind formulation);

LpSolution solve_lp(const LpModel& model);

struct HalfIntegralCheck {
  bool ok = true;
  int worstVertex = -1;   // 0-based vertex of the worst x variable
  double worstDist = 0.0; // distance to the nearest of {0, 1/2, 1}
};

// Examines x variables only; requires a basic solution.
HalfIntegralCheck check_half_integral(const LpModel& model,
                                      const LpSolution& sol,
                                      double tol = 1e-7);

struct LpEquivalence {
  double fullValue = 0.0;    // three-field relaxation, reported
  double zeroFormValue = 0.0;  // after folding into the no-endpoint field
  double twoFormValue = 0.0;   // after folding into the both-endpoint field
  double maxGap = 0.0;
};

// The three relaxations agree on every finite instance.
LpEquivalence lp_equivalence_check(const GvcInstance& inst, double tol = 1e-7);

struct CutPool {
  std::vector<std::vector<int>> cliques;  // vertex lists, size 3 or 4
};

// All triangles, plus 4-cliques when maxSize >= 4.
CutPool clique_cuts(const GvcInstance& inst, int maxSize = 4);

// Appends sum_{v in C} x_v - sum_{uv in E(C)} y_uv <= 1 for each clique
// and re-solves.  The model must carry a y variable per edge.
LpSolution solve_lp_with_cuts(const GvcInstance& inst, const LpModel& model,
                              const CutPool& pool);

void export_lp(const LpModel& model, std::ostream& out);

}  // namespace gvc
