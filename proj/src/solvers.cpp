#include "gvc/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gvc/maxflow.hpp"
#include "gvc/reductions.hpp"

namespace gvc {

namespace {

constexpr double kTol = 1e-9;

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
}

}  // namespace

RoundResult round_gvc(const GvcInstance& inst) {
  RoundResult out;
  out.lp = solve_lp(build(inst, ProblemKind::GVC));
  if (out.lp.status != LpSolution::Status::Optimal)
    throw Error("round_gvc: relaxation did not solve to optimality");
  std::vector<int> members;
  for (int v = 0; v < inst.n; ++v)
    if (out.lp.values[v] >= 0.5 - kTol) members.push_back(v);
  out.rounded = evaluate(inst, ProblemKind::GVC, members);
  return out;
}

double RoundingGuarantee::bound() const {
  if (mode == Mode::AlphaBeta) return std::max({2.0, alpha, alpha * beta});
  return std::max(2.0, bandAlpha);
}

ApproxReport verify_ratio(const GvcInstance& inst,
                          const RoundingGuarantee& guarantee) {
  if (guarantee.mode == RoundingGuarantee::Mode::AlphaBeta &&
      (guarantee.alpha < 1.0 || guarantee.beta < 1.0))
    throw PreconditionError("verify_ratio: alpha and beta must be >= 1");
  if (guarantee.mode == RoundingGuarantee::Mode::Band &&
      (guarantee.bandK < 0.0 || guarantee.bandAlpha < 1.0))
    throw PreconditionError("verify_ratio: band needs K >= 0, alpha >= 1");

  ApproxReport report;
  report.bound = guarantee.bound();
  report.preconditionsHold = true;
  for (int v = 0; v < inst.n && report.preconditionsHold; ++v)
    if (!(inst.c[v] >= 0.0) || !std::isfinite(inst.c[v])) {
      report.preconditionsHold = false;
      report.diagnostic =
          "vertex " + std::to_string(v + 1) + " has negative or infinite cost";
    }
  for (int e = 0; e < inst.m() && report.preconditionsHold; ++e) {
    const double q0 = inst.q0[e], q1 = inst.q1[e], q2 = inst.q2[e];
    std::string why;
    if (!std::isfinite(q0) || !std::isfinite(q1) || !std::isfinite(q2))
      why = "infinite weight";
    else if (q0 < 0.0 || q1 < 0.0 || q2 < 0.0)
      why = "negative weight";
    else if (guarantee.mode == RoundingGuarantee::Mode::AlphaBeta) {
      if (q2 > guarantee.alpha * q1 + kTol)
        why = "q2 exceeds alpha*q1";
      else if (q1 > guarantee.beta * q0 + kTol)
        why = "q1 exceeds beta*q0";
    } else {
      const double lo = guarantee.bandK;
      const double hi = guarantee.bandAlpha * guarantee.bandK;
      if (q0 < lo - kTol || q1 < lo - kTol || q2 < lo - kTol ||
          q0 > hi + kTol || q1 > hi + kTol || q2 > hi + kTol)
        why = "weight outside band";
    }
    if (!why.empty()) {
      report.preconditionsHold = false;
      report.diagnostic = why + " on edge " + edge_text(inst.edges[e]);
    }
  }

  const RoundResult rounded = round_gvc(inst);
  report.heuristicValue = rounded.rounded.value;
  report.optimumValue = brute_force(inst, ProblemKind::GVC).value;
  report.ratioDefined = report.optimumValue > 0.0;
  if (report.ratioDefined) {
    report.ratio = report.heuristicValue / report.optimumValue;
    report.withinBound = report.ratio <= report.bound + kTol;
  } else {
    // A zero optimum still obeys the bound when the heuristic hits it.
    report.withinBound =
        report.heuristicValue <= report.bound * report.optimumValue + kTol;
  }
  return report;
}

FlowNetwork build_mincut_network(const UbqpInstance& inst) {
  for (std::size_t p = 0; p < inst.pairs.size(); ++p)
    if (inst.q[p] > 0.0)
      throw PreconditionError("build_mincut_network: positive pair weight on " +
                              edge_text(inst.pairs[p]));
  for (double w : inst.a)
    if (!std::isfinite(w))
      throw PreconditionError("build_mincut_network: infinite linear weight");

  FlowNetwork net;
  net.nodes = inst.n + 2;
  net.source = 0;
  net.sink = inst.n + 1;
  std::vector<double> linear = inst.a;
  for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
    const double w = 2.0 * inst.q[p];  // <= 0
    if (w == 0.0) continue;
    // w*x_u*x_v = w*x_u + (-w)*x_u*(1-x_v)
    linear[inst.pairs[p].u] += w;
    net.arcs.push_back({inst.pairs[p].u + 1, inst.pairs[p].v + 1, -w});
  }
  for (int v = 0; v < inst.n; ++v) {
    if (linear[v] >= 0.0) {
      if (linear[v] > 0.0) net.arcs.push_back({v + 1, net.sink, linear[v]});
    } else {
      net.arcs.push_back({net.source, v + 1, -linear[v]});
      net.constant += linear[v];
    }
  }
  return net;
}

OracleResult solve_mincut_case(const UbqpInstance& inst) {
  const FlowNetwork net = build_mincut_network(inst);
  MaxFlow flow(net.nodes);
  for (const FlowNetwork::Arc& arc : net.arcs)
    flow.add_edge(arc.from, arc.to, arc.cap);
  flow.solve(net.source, net.sink);
  const std::vector<char> side = flow.min_cut_side(net.source);
  OracleResult result;
  for (int v = 0; v < inst.n; ++v)
    if (side[v + 1]) result.subset.push_back(v);
  result.value = evaluate_ubqp(inst, result.subset);
  return result;
}

OracleResult solve_trivial_nonneg(const UbqpInstance& inst) {
  for (int v = 0; v < inst.n; ++v)
    if (!(inst.a[v] >= 0.0))
      throw PreconditionError("solve_trivial_nonneg: negative linear weight at " +
                              std::to_string(v + 1));
  for (std::size_t p = 0; p < inst.pairs.size(); ++p)
    if (!(inst.q[p] >= 0.0))
      throw PreconditionError("solve_trivial_nonneg: negative pair weight on " +
                              edge_text(inst.pairs[p]));
  OracleResult result;
  result.value = 0.0;
  return result;
}

OracleResult solve_bipartite_flow(const GvcInstance& inst,
                                  const BipartitePartition& part) {
  if (!all_finite(inst))
    throw PreconditionError("solve_bipartite_flow needs finite weights");
  for (int e = 0; e < inst.m(); ++e)
    if (inst.q2[e] - 2.0 * inst.q1[e] + inst.q0[e] < 0.0)
      throw PreconditionError(
          "solve_bipartite_flow: negative folded weight on edge " +
          edge_text(inst.edges[e]));
  const Bqp01Reduction red = bipartite_to_bqp01(inst, part, ProblemKind::GVC);
  const Bqp01Instance& b = red.target;

  // Flip the right side (yBar = 1 - y) so the pair weights become
  // nonpositive and the cut construction applies.
  UbqpInstance flip;
  flip.n = b.m + b.n;
  flip.a.assign(flip.n, 0.0);
  for (int i = 0; i < b.m; ++i) {
    flip.a[i] = b.a[i];
    for (int j = 0; j < b.n; ++j) flip.a[i] += b.q[i][j];
  }
  for (int j = 0; j < b.n; ++j) flip.a[b.m + j] = -b.b[j];
  for (int i = 0; i < b.m; ++i)
    for (int j = 0; j < b.n; ++j)
      if (b.q[i][j] != 0.0) {
        flip.pairs.push_back({i, b.m + j});
        flip.q.push_back(-b.q[i][j] / 2.0);
      }

  const OracleResult cut = solve_mincut_case(flip);
  std::vector<char> chosen(flip.n, 0);
  for (int v : cut.subset) chosen[v] = 1;
  std::vector<int> members;
  for (int i = 0; i < b.m; ++i)
    if (chosen[i]) members.push_back(red.leftVertices[i]);
  for (int j = 0; j < b.n; ++j)
    if (!chosen[b.m + j]) members.push_back(red.rightVertices[j]);
  std::sort(members.begin(), members.end());

  OracleResult result;
  result.subset = std::move(members);
  result.value = evaluate(inst, ProblemKind::GVC, result.subset).value;
  return result;
}

OracleResult branch_on_vertex(const GvcInstance& inst, int v,
                              const SubSolver& subSolver) {
  validate_kind(inst, ProblemKind::GVC2);
  if (v < 0 || v >= inst.n)
    throw PreconditionError("branch_on_vertex: vertex out of range");
  if (!std::isfinite(inst.c[v]))
    throw PreconditionError("branch_on_vertex: infinite vertex weight");

  const GvcInstance without = delete_vertex(inst, v);
  auto unshift = [v](std::vector<int> subset) {
    for (int& u : subset)
      if (u >= v) ++u;
    return subset;
  };

  const OracleResult outBranch = subSolver(without);

  GvcInstance charged = without;
  for (int e = 0; e < inst.m(); ++e) {
    const Edge& ed = inst.edges[e];
    if (ed.u != v && ed.v != v) continue;
    const int other = ed.u == v ? ed.v : ed.u;
    charged.c[other > v ? other - 1 : other] += inst.q2[e];
  }
  const OracleResult inBranch = subSolver(charged);

  const double outValue = outBranch.value;
  const double inValue = inBranch.value + inst.c[v];
  OracleResult result;
  if (outValue <= inValue) {
    result.subset = unshift(outBranch.subset);
  } else {
    result.subset = unshift(inBranch.subset);
    result.subset.push_back(v);
    std::sort(result.subset.begin(), result.subset.end());
  }
  result.value = evaluate(inst, ProblemKind::GVC2, result.subset).value;
  return result;
}

OracleResult branch_solve(const GvcInstance& inst, int depth,
                          const SubSolver& leafSolver) {
  if (depth < 0) throw PreconditionError("branch_solve: negative depth");
  if (depth == 0 || inst.n == 0) return leafSolver(inst);
  std::vector<int> degree(inst.n, 0);
  for (const Edge& e : inst.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  int pick = 0;
  for (int v = 1; v < inst.n; ++v)
    if (degree[v] > degree[pick]) pick = v;
  return branch_on_vertex(inst, pick, [&](const GvcInstance& sub) {
    return branch_solve(sub, depth - 1, leafSolver);
  });
}

TransferReport vcpnew_epsilon_transfer(const GvcInstance& inst) {
  validate_kind(inst, ProblemKind::VCPNEW);
  const GvcReduction folded = vcpnew_to_mwvcp(inst);

  TransferReport report;
  report.surplus = folded.offset;
  report.weights = folded.target.c;
  if (report.surplus < -kTol)
    throw PreconditionError(
        "vcpnew_epsilon_transfer: per-edge surplus sum is negative");
  for (int v = 0; v < inst.n; ++v)
    if (report.weights[v] < -kTol)
      throw PreconditionError(
          "vcpnew_epsilon_transfer: folded weight of vertex " +
          std::to_string(v + 1) + " is negative");

  report.foldedOptimum = brute_force(folded.target, ProblemKind::MWVCP).value;

  // Classical relaxation rounding on the folded cover problem.
  const LpSolution lp = solve_lp(build(folded.target, ProblemKind::VCOP));
  if (lp.status != LpSolution::Status::Optimal)
    throw Error("vcpnew_epsilon_transfer: relaxation did not solve");
  for (int v = 0; v < inst.n; ++v)
    if (lp.values[v] >= 0.5 - kTol) report.cover.push_back(v);
  report.foldedHeuristic =
      evaluate(folded.target, ProblemKind::MWVCP, report.cover).value;

  report.deltaDefined = report.foldedOptimum > 0.0;
  report.heuristicValue =
      evaluate(inst, ProblemKind::VCPNEW, report.cover).value;
  report.optimumValue = brute_force(inst, ProblemKind::VCPNEW).value;
  if (!report.deltaDefined) return report;

  report.delta = report.surplus / report.foldedOptimum;
  report.bound = (report.epsilon + report.delta) / (1.0 + report.delta);
  report.ratio = report.heuristicValue / report.optimumValue;
  report.withinBound = report.ratio <= report.bound + kTol;
  return report;
}

UgvcReport ugvc2_structure(const GvcInstance& inst, double gamma,
                           double delta) {
  validate_kind(inst, ProblemKind::GVC2);
  if (delta == 0.0 || gamma != -delta)
    throw PreconditionError("ugvc2_structure needs gamma = -delta, delta != 0");
  for (double w : inst.c)
    if (w != gamma)
      throw PreconditionError("ugvc2_structure: vertex weight differs from gamma");
  for (int e = 0; e < inst.m(); ++e)
    if (inst.q2[e] != delta)
      throw PreconditionError("ugvc2_structure: edge weight differs from delta");
  if (inst.n > kOracleMaxN)
    throw CapacityError("ugvc2_structure enumerates subsets; n too large");

  UgvcReport report;
  report.gamma = gamma;
  report.delta = delta;
  report.optimum = brute_force(inst, ProblemKind::GVC2).value;

  GvcInstance unit = inst;
  unit.c.assign(inst.n, 1.0);
  unit.q0.assign(inst.m(), 0.0);
  unit.q1.assign(inst.m(), 0.0);
  unit.q2.assign(inst.m(), 0.0);
  report.alphaG = static_cast<std::uint64_t>(
      brute_force(unit, ProblemKind::MWISP).value + 0.5);
  report.predicted = -delta * static_cast<double>(report.alphaG);
  report.optimumMatchesPredicted =
      std::abs(report.optimum - report.predicted) <= kTol;

  // Scan every optimal subset for the two structures.
  const std::uint64_t total = 1ull << inst.n;
  std::vector<char> in(inst.n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int v = 0; v < inst.n; ++v) in[v] = (mask >> v) & 1u;
    double value = 0.0;
    bool cover = true;
    bool independent = true;
    for (int v = 0; v < inst.n; ++v)
      if (in[v]) value += gamma;
    for (const Edge& e : inst.edges) {
      const int ends = in[e.u] + in[e.v];
      if (ends == 2) {
        value += delta;
        independent = false;
      } else if (ends == 0) {
        cover = false;
      }
    }
    if (std::abs(value - report.optimum) > kTol) continue;
    if (cover) report.coverOptimumExists = true;
    if (independent) report.independentOptimumExists = true;
    if (report.coverOptimumExists && report.independentOptimumExists) break;
  }
  return report;
}

}  // namespace gvc
