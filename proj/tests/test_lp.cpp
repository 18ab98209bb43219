#include <doctest.h>

#include <limits>
#include <sstream>

#include "gvc/lp.hpp"
#include "gvc/oracle.hpp"

using namespace gvc;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kTol = 1e-7;

GvcInstance covered_triangle() {
  return make_instance(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1},
                       {kInf, kInf, kInf}, {0, 0, 0}, {2, 1, 3});
}

}  // namespace

TEST_CASE("three-field model of a single edge") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {0, 0}, {5}, {3}, {2});
  const LpModel model = build(g, ProblemKind::GVC);
  CHECK(model.constant == 3);  // sum of q1
  REQUIRE(model.yVar[0] >= 0);
  REQUIRE(model.zVar[0] >= 0);
  CHECK(model.obj[model.yVar[0]] == -1);  // q2 - q1
  CHECK(model.obj[model.zVar[0]] == 2);   // q0 - q1

  const LpSolution sol = solve_lp(model);
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  CHECK(sol.reported == doctest::Approx(2).epsilon(kTol));
  CHECK(check_half_integral(model, sol).ok);
}

TEST_CASE("relaxation of the covered triangle is half a cover") {
  const LpModel model = build(covered_triangle(), ProblemKind::GVC);
  const LpSolution sol = solve_lp(model);
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  CHECK(sol.reported == doctest::Approx(1.5).epsilon(kTol));
  for (int v = 0; v < 3; ++v)
    CHECK(sol.values[model.xVar[v]] == doctest::Approx(0.5).epsilon(kTol));
  CHECK(check_half_integral(model, sol).ok);
}

TEST_CASE("infinite weights need the three-field formulation") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {1, 1}, {0}, {0}, {kInf});
  CHECK_NOTHROW(build(g, ProblemKind::GVC));  // materialized as Big-M
  CHECK_THROWS_AS(build(g, ProblemKind::GVC2), PreconditionError);
  CHECK_THROWS_AS(build(g, ProblemKind::VCPNEW), PreconditionError);
  // fields a formulation never reads may stay infinite
  CHECK_NOTHROW(build(covered_triangle(), ProblemKind::VCPNEW));
  // the plain weighted kinds have no edge variables to model
  CHECK_THROWS_AS(build(g, ProblemKind::MWVCP), PreconditionError);
}

TEST_CASE("big-M coefficients for forbidden configurations") {
  const GvcInstance g = covered_triangle();
  const LpModel model = build(g, ProblemKind::GVC);
  // M = 1 + sum|c| + sum of finite |q|
  for (int e = 0; e < g.m(); ++e)
    CHECK(model.obj[model.zVar[e]] == 10);
}

TEST_CASE("classic cover relaxation on the unweighted triangle") {
  const GvcInstance g = make_instance(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1},
                                      {0, 0, 0}, {0, 0, 0}, {0, 0, 0});
  const LpSolution sol = solve_lp(build(g, ProblemKind::VCOP));
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  CHECK(sol.reported == doctest::Approx(1.5).epsilon(kTol));

  const LpSolution indep = solve_lp(build(g, ProblemKind::ISOP));
  REQUIRE(indep.status == LpSolution::Status::Optimal);
  CHECK(indep.reported == doctest::Approx(1.5).epsilon(kTol));
}

TEST_CASE("every formulation brackets its integer optimum") {
  struct Row {
    ProblemKind kind;
    Family family;
  };
  const Row rows[] = {
      {ProblemKind::GVC, Family::General},
      {ProblemKind::GVC1, Family::Gvc1},
      {ProblemKind::GVC2, Family::Gvc2},
      {ProblemKind::VCPNEW, Family::VcpnewFeasible},
      {ProblemKind::ISPNEW, Family::IspnewFeasible},
  };
  for (const Row& row : rows) {
    GeneratorConfig cfg;
    cfg.family = row.family;
    cfg.n = 7;
    cfg.seed = 99;
    const GvcInstance g = generate(cfg).inst;
    const LpModel model = build(g, row.kind);
    const LpSolution sol = solve_lp(model);
    REQUIRE(sol.status == LpSolution::Status::Optimal);
    const double ip = brute_force(g, row.kind).value;
    if (model.maximize)
      CHECK(sol.reported >= ip - kTol * (1 + std::abs(ip)));
    else
      CHECK(sol.reported <= ip + kTol * (1 + std::abs(ip)));
    CHECK(check_half_integral(model, sol).ok);
  }
}

TEST_CASE("the three relaxations of the full objective agree") {
  GeneratorConfig cfg;
  cfg.family = Family::General;
  cfg.n = 6;
  cfg.seed = 123;
  const LpEquivalence eq = lp_equivalence_check(generate(cfg).inst);
  CHECK(eq.maxGap <= kTol);
  CHECK(eq.fullValue == doctest::Approx(eq.zeroFormValue).epsilon(1e-6));
  CHECK(eq.fullValue == doctest::Approx(eq.twoFormValue).epsilon(1e-6));
}

TEST_CASE("clique cuts close the triangle gap") {
  // negative vertex weights with a positive both-endpoint penalty
  const GvcInstance g = make_instance(3, {{0, 1}, {0, 2}, {1, 2}},
                                      {-1, -1, -1}, {0, 0, 0}, {0, 0, 0},
                                      {1, 1, 1});
  const LpModel model = build(g, ProblemKind::GVC2);
  const LpSolution plain = solve_lp(model);
  REQUIRE(plain.status == LpSolution::Status::Optimal);
  CHECK(plain.reported == doctest::Approx(-1.5).epsilon(kTol));

  const CutPool pool = clique_cuts(g, 4);
  REQUIRE(pool.cliques.size() == 1);
  CHECK(pool.cliques[0] == std::vector<int>{0, 1, 2});

  const LpSolution cut = solve_lp_with_cuts(g, model, pool);
  REQUIRE(cut.status == LpSolution::Status::Optimal);
  const double ip = brute_force(g, ProblemKind::GVC2).value;
  CHECK(ip == -1);
  CHECK(cut.reported >= plain.reported - kTol);
  CHECK(cut.reported <= ip + kTol);
}

TEST_CASE("four-cliques are collected when asked") {
  // K4
  const GvcInstance g = make_instance(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0});
  CHECK(clique_cuts(g, 3).cliques.size() == 4);
  CHECK(clique_cuts(g, 4).cliques.size() == 5);
}

TEST_CASE("model export is readable LP text") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {1, 2}, {0}, {0}, {3});
  std::ostringstream out;
  export_lp(build(g, ProblemKind::GVC2), out);
  const std::string text = out.str();
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("Bounds") != std::string::npos);
  CHECK(text.find("x_1") != std::string::npos);
}
