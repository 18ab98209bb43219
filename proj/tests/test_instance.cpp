#include <doctest.h>

#include <cmath>
#include <limits>

#include "gvc/instance.hpp"

using namespace gvc;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

GvcInstance triangle() {
  // c = 1 everywhere, q0 = inf (uncovered edges forbidden), q2 per edge
  return make_instance(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1},
                       {kInf, kInf, kInf}, {0, 0, 0}, {2, 1, 3});
}

}  // namespace

TEST_CASE("make_instance normalizes and validates") {
  const GvcInstance g =
      make_instance(3, {{2, 0}, {1, 0}}, {1, 2, 3}, {0, 0}, {0, 0}, {5, 6});
  REQUIRE(g.m() == 2);
  CHECK(g.edges[0] == Edge{0, 1});
  CHECK(g.edges[1] == Edge{0, 2});
  // q rows follow their edges through the sort
  CHECK(g.q2[0] == 6);
  CHECK(g.q2[1] == 5);

  CHECK_THROWS_AS(make_instance(2, {{0, 0}}, {0, 0}, {0}, {0}, {0}), Error);
  CHECK_THROWS_AS(make_instance(2, {{0, 2}}, {0, 0}, {0}, {0}, {0}), Error);
  CHECK_THROWS_AS(
      make_instance(2, {{0, 1}, {1, 0}}, {0, 0}, {0, 0}, {0, 0}, {0, 0}),
      Error);
  CHECK_THROWS_AS(make_instance(2, {{0, 1}}, {0}, {0}, {0}, {0}), Error);
}

TEST_CASE("kind table") {
  CHECK(kind_info(ProblemKind::GVC).usesQ0);
  CHECK(kind_info(ProblemKind::GVC).usesQ1);
  CHECK(kind_info(ProblemKind::GVC).usesQ2);
  CHECK(kind_info(ProblemKind::GVC).feasible == Feasible::AnySubset);

  CHECK(kind_info(ProblemKind::GVC1).usesQ0);
  CHECK_FALSE(kind_info(ProblemKind::GVC1).usesQ2);
  CHECK(kind_info(ProblemKind::GVC1).reqZeroQ1);
  CHECK(kind_info(ProblemKind::GVC1).reqZeroQ2);

  CHECK(kind_info(ProblemKind::VCPNEW).feasible == Feasible::VertexCover);
  CHECK_FALSE(kind_info(ProblemKind::VCPNEW).usesQ0);
  CHECK_FALSE(kind_info(ProblemKind::VCPNEW).maximize);

  CHECK(kind_info(ProblemKind::ISPNEW).feasible == Feasible::IndependentSet);
  CHECK(kind_info(ProblemKind::ISPNEW).maximize);
  CHECK(kind_info(ProblemKind::ISPNEW).usesQ0);
  CHECK(kind_info(ProblemKind::ISPNEW).usesQ1);
  CHECK_FALSE(kind_info(ProblemKind::ISPNEW).usesQ2);

  CHECK(kind_info(ProblemKind::MWVCP).reqZeroQ0);
  CHECK(kind_info(ProblemKind::MWVCP).reqZeroQ1);
  CHECK(kind_info(ProblemKind::MWVCP).reqZeroQ2);
  CHECK(kind_info(ProblemKind::MWISP).maximize);

  for (ProblemKind kind :
       {ProblemKind::GVC, ProblemKind::GVC1, ProblemKind::GVC2,
        ProblemKind::VCPNEW, ProblemKind::VCOP, ProblemKind::VCUP,
        ProblemKind::ISPNEW, ProblemKind::ISOP, ProblemKind::ISUP,
        ProblemKind::MWVCP, ProblemKind::MWISP}) {
    const auto back = kind_from_name(kind_name(kind));
    REQUIRE(back.has_value());
    CHECK(*back == kind);
  }
  CHECK_FALSE(kind_from_name("nope").has_value());
}

TEST_CASE("validate_kind enforces forced-zero fields") {
  const GvcInstance g =
      make_instance(2, {{0, 1}}, {0, 0}, {5}, {3}, {2});
  CHECK_NOTHROW(validate_kind(g, ProblemKind::GVC));
  CHECK_THROWS_AS(validate_kind(g, ProblemKind::GVC1), PreconditionError);
  CHECK_THROWS_AS(validate_kind(g, ProblemKind::MWVCP), PreconditionError);
  const GvcInstance zeroed =
      make_instance(2, {{0, 1}}, {1, 2}, {0}, {0}, {0});
  CHECK_NOTHROW(validate_kind(zeroed, ProblemKind::MWVCP));
}

TEST_CASE("evaluate partitions edges by endpoint count") {
  const GvcInstance g = triangle();
  const SubsetSolution s = evaluate(g, ProblemKind::GVC, {0, 2});
  CHECK(s.value == 3);  // c_1 + c_3 + q2 of edge {1,3}
  CHECK(s.partitionCounts[0] == 0);
  CHECK(s.partitionCounts[1] == 2);
  CHECK(s.partitionCounts[2] == 1);

  // empty subset leaves all edges uncovered -> infinite q0
  CHECK(std::isinf(evaluate(g, ProblemKind::GVC, {}).value));

  const auto parts = edge_partition(g, {0});
  CHECK(parts[0] == std::vector<int>{2});     // edge {2,3}
  CHECK(parts[1] == std::vector<int>{0, 1});  // edges at vertex 1
  CHECK(parts[2].empty());
}

TEST_CASE("evaluate enforces feasibility per kind") {
  const GvcInstance path =
      make_instance(3, {{0, 1}, {1, 2}}, {1, 1, 1}, {0, 0}, {0, 0}, {0, 0});
  CHECK(evaluate(path, ProblemKind::MWVCP, {1}).value == 1);
  CHECK_THROWS_AS(evaluate(path, ProblemKind::MWVCP, {0}), FeasibilityError);
  CHECK(evaluate(path, ProblemKind::MWISP, {0, 2}).value == 2);
  CHECK_THROWS_AS(evaluate(path, ProblemKind::MWISP, {0, 1}),
                  FeasibilityError);
  CHECK_THROWS_AS(evaluate(path, ProblemKind::GVC, {3}), Error);
}

TEST_CASE("evaluate reads only the kind's fields") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {4, 1}, {2}, {3}, {7});
  // independent-set kind with q0 + q1 only
  CHECK(evaluate(g, ProblemKind::ISPNEW, {}).value == 2);
  CHECK(evaluate(g, ProblemKind::ISPNEW, {0}).value == 7);
  // both-endpoint kind reads q2 alone
  const GvcInstance h = make_instance(2, {{0, 1}}, {4, 1}, {0}, {0}, {7});
  CHECK(evaluate(h, ProblemKind::GVC2, {0, 1}).value == 12);
  CHECK(evaluate(h, ProblemKind::GVC2, {}).value == 0);
}

TEST_CASE("ubqp and bqp01 evaluation") {
  const UbqpInstance u = make_ubqp(2, {1, -2}, {{0, 1}}, {3});
  CHECK(evaluate_ubqp(u, {}) == 0);
  CHECK(evaluate_ubqp(u, {1}) == -2);
  CHECK(evaluate_ubqp(u, {0, 1}) == 5);  // 1 - 2 + 2*3

  CHECK(support_graph(make_ubqp(2, {0, 0}, {{0, 1}}, {0})).empty());
  CHECK(support_graph(u).size() == 1);

  const Bqp01Instance b = make_bqp01(1, 2, {2}, {1, -1}, {{3, -4}});
  CHECK(evaluate_bqp01(b, {}, {}) == 0);
  CHECK(evaluate_bqp01(b, {0}, {1}) == -3);
  CHECK(evaluate_bqp01(b, {0}, {0, 1}) == 1);
}

TEST_CASE("two_color and partitions") {
  const GvcInstance path =
      make_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 0, 0, 0}, {0, 0, 0},
                    {0, 0, 0}, {0, 0, 0});
  const auto part = two_color(path);
  REQUIRE(part.has_value());
  CHECK(part->left == std::vector<int>{0, 2});
  CHECK(part->right == std::vector<int>{1, 3});
  CHECK_NOTHROW(validate_partition(path, *part));

  CHECK_FALSE(two_color(triangle()).has_value());

  // isolated vertices go left
  const GvcInstance lone =
      make_instance(2, {}, {0, 0}, {}, {}, {});
  CHECK(two_color(lone)->left == std::vector<int>{0, 1});

  BipartitePartition bad{{0, 1}, {2, 3}};  // edge {1,2} does not cross
  CHECK_THROWS_AS(validate_partition(path, bad), Error);
}

TEST_CASE("delete_vertex shifts indices and keeps q rows aligned") {
  const GvcInstance path =
      make_instance(3, {{0, 1}, {1, 2}}, {10, 20, 30}, {1, 2}, {3, 4}, {5, 6});
  const GvcInstance noMid = delete_vertex(path, 1);
  CHECK(noMid.n == 2);
  CHECK(noMid.m() == 0);
  CHECK(noMid.c == std::vector<double>{10, 30});

  const GvcInstance noFirst = delete_vertex(path, 0);
  CHECK(noFirst.n == 2);
  REQUIRE(noFirst.m() == 1);
  CHECK(noFirst.edges[0] == Edge{0, 1});
  CHECK(noFirst.q0 == std::vector<double>{2});
  CHECK(noFirst.q2 == std::vector<double>{6});
}

TEST_CASE("big_m skips infinite entries") {
  CHECK(big_m(triangle()) == 10);  // 1 + 3 + (2+1+3), infinite q0 ignored
  CHECK_FALSE(all_finite(triangle()));
  const GvcInstance g = make_instance(2, {{0, 1}}, {-2, 3}, {1}, {-4}, {0});
  CHECK(all_finite(g));
  CHECK(big_m(g) == 11);
}
