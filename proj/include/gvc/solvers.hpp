#pragma once

// Rounding heuristic, polynomially solvable special cases, and the
// structural reports built on them.

#include <cstdint>
#include <functional>

#include "gvc/instance.hpp"
#include "gvc/lp.hpp"
#include "gvc/oracle.hpp"

namespace gvc {

struct RoundResult {
  SubsetSolution rounded;  // value comes from a fresh evaluation
  LpSolution lp;           // the relaxation it was rounded from
};

// Solve the three-field relaxation and take x >= 1/2 (ties round up).
RoundResult round_gvc(const GvcInstance& inst);

struct RoundingGuarantee {
  enum class Mode { AlphaBeta, Band };
  Mode mode = Mode::AlphaBeta;
  double alpha = 1.0;  // AlphaBeta: q2 <= alpha*q1, q1 <= beta*q0
  double beta = 1.0;
  double bandK = 0.0;  // Band: all q in [K, bandAlpha*K]
  double bandAlpha = 2.0;

  double bound() const;
};

struct ApproxReport {
  bool preconditionsHold = false;
  std::string diagnostic;  // first violated hypothesis, names the edge
  double bound = 0.0;
  double heuristicValue = 0.0;
  double optimumValue = 0.0;
  double ratio = 0.0;
  bool ratioDefined = false;  // optimum > 0
  bool withinBound = false;
};

// Checks the guarantee's hypotheses, rounds, compares against the
// exhaustive optimum.  A failed hypothesis is reported, not thrown, so
// counter-examples can still be inspected.
ApproxReport verify_ratio(const GvcInstance& inst,
                          const RoundingGuarantee& guarantee);

struct FlowNetwork {
  struct Arc {
    int from = 0;
    int to = 0;
    double cap = 0.0;
  };
  int nodes = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;
  double constant = 0.0;  // min objective = min cut + constant
};

// Posiform network for min a'x + sum 2*Q_ij x_i x_j with Q <= 0.
// Variable i sits on the source side of the cut iff x_i = 1.
FlowNetwork build_mincut_network(const UbqpInstance& inst);

OracleResult solve_mincut_case(const UbqpInstance& inst);

// Q >= 0 and a >= 0: the empty set is optimal.
OracleResult solve_trivial_nonneg(const UbqpInstance& inst);

// Bipartite instances whose folded edge weight q2 - 2*q1 + q0 is
// nonnegative on every edge reduce to a cut problem.
OracleResult solve_bipartite_flow(const GvcInstance& inst,
                                  const BipartitePartition& part);

using SubSolver = std::function<OracleResult(const GvcInstance&)>;

// One branching step on vertex v of a both-endpoint-field instance:
// the out-branch deletes v, the in-branch deletes v and charges q2 of
// its edges to the neighbours.
OracleResult branch_on_vertex(const GvcInstance& inst, int v,
                              const SubSolver& subSolver);

// Branch up to `depth` times on a max-degree vertex, then hand the rest
// to `leafSolver`.
OracleResult branch_solve(const GvcInstance& inst, int depth,
                          const SubSolver& leafSolver);

struct TransferReport {
  double surplus = 0.0;            // sum of (2*q1 - q2), must be >= 0
  std::vector<double> weights;     // folded vertex weights, must be >= 0
  double foldedOptimum = 0.0;      // optimal folded cover weight
  double foldedHeuristic = 0.0;    // rounded cover's folded weight
  double delta = 0.0;              // surplus / foldedOptimum
  bool deltaDefined = false;
  double epsilon = 2.0;            // guarantee of the folded heuristic
  double bound = 0.0;              // (epsilon + delta) / (1 + delta)
  double optimumValue = 0.0;
  double heuristicValue = 0.0;
  double ratio = 0.0;
  bool withinBound = false;
  std::vector<int> cover;          // the heuristic cover
};

// A 2-approximate cover for the folded vertex weights is
// (2+delta)/(1+delta)-approximate for the original objective.
TransferReport vcpnew_epsilon_transfer(const GvcInstance& inst);

struct UgvcReport {
  double gamma = 0.0;
  double delta = 0.0;
  double optimum = 0.0;
  std::uint64_t alphaG = 0;     // maximum independent set size
  double predicted = 0.0;       // -delta * alpha(G)
  bool optimumMatchesPredicted = false;
  bool independentOptimumExists = false;
  bool coverOptimumExists = false;
};

// Uniform instances c = gamma = -delta, q2 = delta.  Exhaustive scan of
// the optimal subsets, reporting which structures appear among them.
UgvcReport ugvc2_structure(const GvcInstance& inst, double gamma,
                           double delta);

}  // namespace gvc
