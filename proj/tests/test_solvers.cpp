#include <doctest.h>

#include <limits>

#include "gvc/oracle.hpp"
#include "gvc/solvers.hpp"

using namespace gvc;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kTol = 1e-7;

GvcInstance covered_triangle() {
  return make_instance(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1},
                       {kInf, kInf, kInf}, {0, 0, 0}, {2, 1, 3});
}

}  // namespace

TEST_CASE("rounding takes the whole fractional triangle") {
  const RoundResult r = round_gvc(covered_triangle());
  CHECK(r.lp.reported == doctest::Approx(1.5).epsilon(kTol));
  CHECK(r.rounded.members == std::vector<int>{0, 1, 2});
  CHECK(r.rounded.value == 9);  // 3 + (2+1+3)
}

TEST_CASE("ratio verification against the stated guarantee") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {1, 1}, {4}, {2}, {2});
  RoundingGuarantee guarantee;
  guarantee.alpha = 1;
  guarantee.beta = 1;
  CHECK(guarantee.bound() == 2);

  const ApproxReport report = verify_ratio(g, guarantee);
  CHECK(report.preconditionsHold);
  CHECK(report.diagnostic.empty());
  if (report.ratioDefined) CHECK(report.ratio <= report.bound + kTol);
  CHECK(report.withinBound);
}

TEST_CASE("violated hypotheses are reported, not thrown") {
  // negative vertex weight breaks the comparison argument
  const GvcInstance g = make_instance(2, {{0, 1}}, {-1, 1}, {4}, {2}, {2});
  const ApproxReport report = verify_ratio(g, RoundingGuarantee{});
  CHECK_FALSE(report.preconditionsHold);
  CHECK_FALSE(report.diagnostic.empty());

  // a chain violation names the offending edge
  const GvcInstance h = make_instance(2, {{0, 1}}, {1, 1}, {1}, {5}, {0});
  RoundingGuarantee tight;
  tight.alpha = 1;
  tight.beta = 2;  // q1 = 5 > 2 * q0
  const ApproxReport broken = verify_ratio(h, tight);
  CHECK_FALSE(broken.preconditionsHold);
  CHECK(broken.diagnostic.find("{1,2}") != std::string::npos);

  RoundingGuarantee bad;
  bad.alpha = 0.5;
  CHECK_THROWS_AS(verify_ratio(g, bad), PreconditionError);
}

TEST_CASE("band guarantee") {
  GeneratorConfig cfg;
  cfg.family = Family::Band;
  cfg.n = 7;
  cfg.bandK = 2;
  cfg.alpha = 3;
  cfg.weightLo = 0;
  cfg.weightHi = 6;
  cfg.seed = 31;
  const GvcInstance g = generate(cfg).inst;

  RoundingGuarantee guarantee;
  guarantee.mode = RoundingGuarantee::Mode::Band;
  guarantee.bandK = 2;
  guarantee.bandAlpha = 3;
  CHECK(guarantee.bound() == 3);  // max{2, alpha}
  const ApproxReport report = verify_ratio(g, guarantee);
  CHECK(report.preconditionsHold);
  CHECK(report.withinBound);
}

TEST_CASE("nonpositive quadratic solves as a cut") {
  const UbqpInstance u = make_ubqp(2, {-1, -1}, {{0, 1}}, {-2});
  const FlowNetwork net = build_mincut_network(u);
  CHECK(net.nodes == 4);
  CHECK(net.constant == -6);

  const OracleResult fast = solve_mincut_case(u);
  const OracleResult slow = brute_force_ubqp(u);
  CHECK(fast.value == -6);
  CHECK(fast.value == slow.value);
  CHECK(fast.subset == slow.subset);

  CHECK_THROWS_AS(build_mincut_network(make_ubqp(2, {0, 0}, {{0, 1}}, {1})),
                  PreconditionError);
}

TEST_CASE("trivial nonnegative case") {
  const UbqpInstance u = make_ubqp(3, {2, 0, 1}, {{0, 2}}, {1});
  const OracleResult r = solve_trivial_nonneg(u);
  CHECK(r.value == 0);
  CHECK(r.subset.empty());
  CHECK_THROWS_AS(solve_trivial_nonneg(make_ubqp(1, {-1}, {}, {})),
                  PreconditionError);
}

TEST_CASE("bipartite flow equals brute force") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {2, -3}, {4}, {1}, {0});
  const BipartitePartition part{{0}, {1}};
  const OracleResult fast = solve_bipartite_flow(g, part);
  const OracleResult slow = brute_force(g, ProblemKind::GVC);
  CHECK(fast.value == -2);
  CHECK(fast.value == slow.value);
  CHECK(fast.subset == slow.subset);

  // folded weight q2 - 2q1 + q0 must be nonnegative
  const GvcInstance bad = make_instance(2, {{0, 1}}, {0, 0}, {0}, {3}, {0});
  CHECK_THROWS_AS(solve_bipartite_flow(bad, part), PreconditionError);
}

TEST_CASE("branching on a vertex and full branch solve") {
  const GvcInstance g = make_instance(3, {{0, 1}, {0, 2}, {1, 2}},
                                      {-2, -2, -2}, {0, 0, 0}, {0, 0, 0},
                                      {3, 3, 3});
  const OracleResult slow = brute_force(g, ProblemKind::GVC2);
  CHECK(slow.value == -2);
  CHECK(slow.subset == std::vector<int>{0});
  CHECK(slow.optimaCount == 3);

  const SubSolver leaf = [](const GvcInstance& sub) {
    return brute_force(sub, ProblemKind::GVC2);
  };
  for (int depth : {0, 1, 2, 3, 5}) {
    const OracleResult fast = branch_solve(g, depth, leaf);
    CHECK(fast.value == slow.value);
    CHECK(evaluate(g, ProblemKind::GVC2, fast.subset).value == fast.value);
  }
  const OracleResult step = branch_on_vertex(g, 1, leaf);
  CHECK(step.value == slow.value);
}

TEST_CASE("folded-cover transfer bound") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {3, 3}, {0}, {1}, {1});
  const TransferReport report = vcpnew_epsilon_transfer(g);
  CHECK(report.surplus == 1);
  CHECK(report.weights == std::vector<double>{3, 3});
  CHECK(report.foldedOptimum == 3);
  REQUIRE(report.deltaDefined);
  CHECK(report.delta == doctest::Approx(1.0 / 3).epsilon(kTol));
  CHECK(report.bound == doctest::Approx(1.75).epsilon(kTol));
  CHECK(report.withinBound);
  CHECK(evaluate(g, ProblemKind::VCPNEW, report.cover).value ==
        report.heuristicValue);

  // folding may not produce a negative vertex weight
  const GvcInstance bad = make_instance(2, {{0, 1}}, {0, 0}, {0}, {3}, {1});
  CHECK_THROWS_AS(vcpnew_epsilon_transfer(bad), PreconditionError);
}

TEST_CASE("uniform both-endpoint structure") {
  const GvcInstance tri = make_instance(3, {{0, 1}, {0, 2}, {1, 2}},
                                        {-1, -1, -1}, {0, 0, 0}, {0, 0, 0},
                                        {1, 1, 1});
  const UgvcReport up = ugvc2_structure(tri, -1, 1);
  CHECK(up.alphaG == 1);
  CHECK(up.optimum == -1);
  CHECK(up.predicted == -1);
  CHECK(up.optimumMatchesPredicted);
  CHECK(up.independentOptimumExists);

  const GvcInstance path = make_instance(3, {{0, 1}, {1, 2}}, {-2, -2, -2},
                                         {0, 0}, {0, 0}, {2, 2});
  const UgvcReport wide = ugvc2_structure(path, -2, 2);
  CHECK(wide.alphaG == 2);
  CHECK(wide.optimum == -4);
  CHECK(wide.optimumMatchesPredicted);

  // negative delta: on a single edge no optimal subset is a cover
  const GvcInstance pair =
      make_instance(2, {{0, 1}}, {1, 1}, {0}, {0}, {-1});
  const UgvcReport down = ugvc2_structure(pair, 1, -1);
  CHECK(down.optimum == 0);
  CHECK(down.independentOptimumExists);
  CHECK_FALSE(down.coverOptimumExists);

  CHECK_THROWS_AS(ugvc2_structure(tri, -1, 2), PreconditionError);
}
