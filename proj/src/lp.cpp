#include "gvc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "gvc/reductions.hpp"

namespace gvc {

namespace {

std::string edge_suffix(const Edge& e) {
  return std::to_string(e.u + 1) + "_" + std::to_string(e.v + 1);
}

}  // namespace

LpModel build(const GvcInstance& inst, ProblemKind formulation) {
  const KindInfo& info = kind_info(formulation);
  if (formulation == ProblemKind::MWVCP || formulation == ProblemKind::MWISP)
    throw PreconditionError("build: no formulation for plain weighted kinds");
  validate_kind(inst, formulation);
  if (formulation != ProblemKind::GVC) {
    // Only the three-field formulation takes Big-M; elsewhere an
    // infinite weight in a used field is a modelling error.
    for (int e = 0; e < inst.m(); ++e) {
      if ((info.usesQ0 && !std::isfinite(inst.q0[e])) ||
          (info.usesQ1 && !std::isfinite(inst.q1[e])) ||
          (info.usesQ2 && !std::isfinite(inst.q2[e])))
        throw PreconditionError("build: infinite weight outside gvc formulation");
    }
    for (double w : inst.c)
      if (!std::isfinite(w))
        throw PreconditionError("build: infinite vertex weight");
  }

  LpModel model;
  model.formulation = formulation;
  model.maximize = info.maximize;
  model.n = inst.n;
  model.m = inst.m();
  model.xVar.assign(inst.n, -1);
  model.yVar.assign(inst.m(), -1);
  model.zVar.assign(inst.m(), -1);
  model.rVar.assign(inst.m(), -1);

  const double M = big_m(inst);
  auto cap = [&](double w) { return std::isfinite(w) ? w : M; };

  auto addVar = [&](double objCoef, const std::string& name) {
    model.obj.push_back(objCoef);
    model.lower.push_back(0.0);
    model.upper.push_back(1.0);
    model.names.push_back(name);
    return static_cast<int>(model.obj.size()) - 1;
  };

  for (int v = 0; v < inst.n; ++v)
    model.xVar[v] = addVar(cap(inst.c[v]), "x_" + std::to_string(v + 1));

  const bool useY = formulation == ProblemKind::GVC ||
                    formulation == ProblemKind::GVC2 ||
                    formulation == ProblemKind::VCPNEW ||
                    formulation == ProblemKind::VCOP;
  const bool useZ = formulation == ProblemKind::GVC ||
                    formulation == ProblemKind::GVC1 ||
                    formulation == ProblemKind::ISPNEW ||
                    formulation == ProblemKind::ISOP;
  const bool useR = formulation == ProblemKind::VCPNEW ||
                    formulation == ProblemKind::VCUP ||
                    formulation == ProblemKind::ISPNEW ||
                    formulation == ProblemKind::ISUP;

  for (int e = 0; e < inst.m(); ++e) {
    const Edge& ed = inst.edges[e];
    const double q0 = cap(inst.q0[e]);
    const double q1 = cap(inst.q1[e]);
    const double q2 = cap(inst.q2[e]);
    if (useY) {
      double coef = 0.0;
      if (formulation == ProblemKind::GVC)
        coef = q2 - q1;
      else
        coef = q2;
      model.yVar[e] = addVar(coef, "y_" + edge_suffix(ed));
    }
    if (useZ) {
      double coef = 0.0;
      if (formulation == ProblemKind::GVC)
        coef = q0 - q1;
      else
        coef = q0;
      model.zVar[e] = addVar(coef, "z_" + edge_suffix(ed));
    }
    if (useR) model.rVar[e] = addVar(q1, "r_" + edge_suffix(ed));
  }

  for (int e = 0; e < inst.m(); ++e) {
    const int xu = model.xVar[inst.edges[e].u];
    const int xv = model.xVar[inst.edges[e].v];
    const int y = model.yVar[e];
    const int z = model.zVar[e];
    const int r = model.rVar[e];
    switch (formulation) {
      case ProblemKind::GVC:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {y, -1}}, 'L', 1});
        model.rows.push_back({{{y, 1}, {xu, -1}}, 'L', 0});
        model.rows.push_back({{{y, 1}, {xv, -1}}, 'L', 0});
        model.rows.push_back({{{xu, 1}, {xv, 1}, {y, -1}, {z, 1}}, 'E', 1});
        model.constant += cap(inst.q1[e]);
        break;
      case ProblemKind::GVC1:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {z, 1}}, 'G', 1});
        model.rows.push_back({{{z, 1}, {xu, 1}}, 'L', 1});
        model.rows.push_back({{{z, 1}, {xv, 1}}, 'L', 1});
        break;
      case ProblemKind::GVC2:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {y, -1}}, 'L', 1});
        model.rows.push_back({{{y, 1}, {xu, -1}}, 'L', 0});
        model.rows.push_back({{{y, 1}, {xv, -1}}, 'L', 0});
        break;
      case ProblemKind::VCPNEW:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {y, -1}}, 'E', 1});
        model.rows.push_back({{{y, 1}, {r, 1}}, 'E', 1});
        break;
      case ProblemKind::VCOP:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {y, -1}}, 'E', 1});
        break;
      case ProblemKind::VCUP:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {r, 1}}, 'E', 2});
        break;
      case ProblemKind::ISPNEW:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {z, 1}}, 'E', 1});
        model.rows.push_back({{{z, 1}, {r, 1}}, 'E', 1});
        break;
      case ProblemKind::ISOP:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {z, 1}}, 'E', 1});
        break;
      case ProblemKind::ISUP:
        model.rows.push_back({{{xu, 1}, {xv, 1}, {r, -1}}, 'E', 0});
        break;
      default:
        break;
    }
  }
  return model;
}

LpSolution solve_lp(const LpModel& model) {
  std::vector<double> cost = model.obj;
  if (model.maximize)
    for (double& w : cost) w = -w;
  SimplexResult res = simplex_solve(cost, model.lower, model.upper, model.rows);
  LpSolution sol;
  sol.iterations = res.iterations;
  sol.basic = res.basic;
  switch (res.status) {
    case SimplexResult::Status::Infeasible:
      sol.status = LpSolution::Status::Infeasible;
      return sol;
    case SimplexResult::Status::Unbounded:
      sol.status = LpSolution::Status::Unbounded;
      return sol;
    default:
      break;
  }
  sol.status = LpSolution::Status::Optimal;
  sol.values = res.x;
  sol.raw = model.maximize ? -res.objective : res.objective;
  sol.reported = sol.raw + model.constant;
  return sol;
}

HalfIntegralCheck check_half_integral(const LpModel& model,
                                      const LpSolution& sol, double tol) {
  if (sol.status != LpSolution::Status::Optimal || !sol.basic)
    throw PreconditionError("check_half_integral needs a basic optimal solution");
  HalfIntegralCheck check;
  for (int v = 0; v < model.n; ++v) {
    const double x = sol.values[model.xVar[v]];
    const double dist =
        std::min({std::abs(x), std::abs(x - 0.5), std::abs(x - 1.0)});
    if (dist > check.worstDist) {
      check.worstDist = dist;
      check.worstVertex = v;
    }
  }
  check.ok = check.worstDist <= tol;
  return check;
}

LpEquivalence lp_equivalence_check(const GvcInstance& inst, double tol) {
  if (!all_finite(inst))
    throw PreconditionError("lp_equivalence_check needs finite weights");
  LpEquivalence eq;
  {
    const LpSolution s = solve_lp(build(inst, ProblemKind::GVC));
    eq.fullValue = s.reported;
  }
  {
    const GvcReduction red = gvc_to_gvc1(inst);
    const LpSolution s = solve_lp(build(red.target, ProblemKind::GVC1));
    eq.zeroFormValue = s.reported + red.offset;
  }
  {
    const GvcReduction red = gvc_to_gvc2(inst);
    const LpSolution s = solve_lp(build(red.target, ProblemKind::GVC2));
    eq.twoFormValue = s.reported + red.offset;
  }
  eq.maxGap = std::max({std::abs(eq.fullValue - eq.zeroFormValue),
                        std::abs(eq.fullValue - eq.twoFormValue),
                        std::abs(eq.zeroFormValue - eq.twoFormValue)});
  (void)tol;
  return eq;
}

CutPool clique_cuts(const GvcInstance& inst, int maxSize) {
  if (inst.n > 512)
    throw CapacityError("clique_cuts: adjacency matrix capped at 512 vertices");
  if (maxSize < 3 || maxSize > 4)
    throw PreconditionError("clique_cuts: maxSize must be 3 or 4");
  std::vector<char> adj(static_cast<std::size_t>(inst.n) * inst.n, 0);
  auto a = [&](int u, int v) -> char& {
    return adj[static_cast<std::size_t>(u) * inst.n + v];
  };
  for (const Edge& e : inst.edges) a(e.u, e.v) = a(e.v, e.u) = 1;
  CutPool pool;
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j) {
      if (!a(i, j)) continue;
      for (int k = j + 1; k < inst.n; ++k) {
        if (!a(i, k) || !a(j, k)) continue;
        pool.cliques.push_back({i, j, k});
        if (maxSize < 4) continue;
        for (int l = k + 1; l < inst.n; ++l)
          if (a(i, l) && a(j, l) && a(k, l))
            pool.cliques.push_back({i, j, k, l});
      }
    }
  return pool;
}

LpSolution solve_lp_with_cuts(const GvcInstance& inst, const LpModel& model,
                              const CutPool& pool) {
  if (model.formulation != ProblemKind::GVC2)
    throw PreconditionError("solve_lp_with_cuts expects the both-endpoint model");
  LpModel cut = model;
  for (const std::vector<int>& clique : pool.cliques) {
    SimplexRow row;
    row.op = 'L';
    row.rhs = 1.0;
    for (int v : clique) row.terms.push_back({model.xVar[v], 1.0});
    for (std::size_t s = 0; s < clique.size(); ++s)
      for (std::size_t t = s + 1; t < clique.size(); ++t) {
        const int u = std::min(clique[s], clique[t]);
        const int v = std::max(clique[s], clique[t]);
        const auto it = std::lower_bound(
            inst.edges.begin(), inst.edges.end(), Edge{u, v},
            [](const Edge& x, const Edge& y) {
              return std::pair(x.u, x.v) < std::pair(y.u, y.v);
            });
        if (it == inst.edges.end() || !(*it == Edge{u, v}))
          throw PreconditionError("solve_lp_with_cuts: clique edge missing");
        const int e = static_cast<int>(it - inst.edges.begin());
        if (model.yVar[e] < 0)
          throw PreconditionError("solve_lp_with_cuts: no y variable for edge");
        row.terms.push_back({model.yVar[e], -1.0});
      }
    cut.rows.push_back(std::move(row));
  }
  return solve_lp(cut);
}

namespace {

void write_term(std::ostream& out, double coef, const std::string& name,
                bool first) {
  if (coef == 0.0 && !first) return;
  if (first) {
    if (coef == -1.0)
      out << "- ";
    else if (coef != 1.0)
      out << coef << " ";
  } else {
    out << (coef < 0 ? " - " : " + ");
    const double mag = std::abs(coef);
    if (mag != 1.0) out << mag << " ";
  }
  out << name;
}

}  // namespace

void export_lp(const LpModel& model, std::ostream& out) {
  out << (model.maximize ? "Maximize" : "Minimize") << "\n obj:";
  bool first = true;
  for (std::size_t j = 0; j < model.obj.size(); ++j) {
    if (model.obj[j] == 0.0) continue;
    out << " ";
    write_term(out, model.obj[j], model.names[j], first);
    first = false;
  }
  if (first && !model.names.empty()) out << " 0 " << model.names[0];
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    out << " c" << (r + 1) << ":";
    bool rFirst = true;
    for (const auto& [c, a] : model.rows[r].terms) {
      if (a == 0.0) continue;
      out << " ";
      write_term(out, a, model.names[c], rFirst);
      rFirst = false;
    }
    const char* rel = model.rows[r].op == 'L'   ? "<="
                      : model.rows[r].op == 'G' ? ">="
                                                : "=";
    out << " " << rel << " " << model.rows[r].rhs << "\n";
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < model.obj.size(); ++j)
    out << " " << model.lower[j] << " <= " << model.names[j] << " <= "
        << model.upper[j] << "\n";
  out << "End\n";
}

}  // namespace gvc
