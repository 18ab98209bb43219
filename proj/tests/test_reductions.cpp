#include <doctest.h>

#include <limits>
#include <vector>

#include "gvc/oracle.hpp"
#include "gvc/reductions.hpp"

using namespace gvc;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

std::vector<int> mask_members(int n, unsigned mask) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

// sourceValue(map_back(U)) == senseSign * targetValue(U) + offset for
// every subset U feasible in the target kind.
void check_identity(const GvcInstance& src, ProblemKind srcKind,
                    const GvcReduction& red) {
  for (unsigned mask = 0; mask < (1u << red.target.n); ++mask) {
    const auto members = mask_members(red.target.n, mask);
    double targetValue;
    try {
      targetValue = evaluate(red.target, red.targetKind, members).value;
    } catch (const FeasibilityError&) {
      continue;
    }
    const double sourceValue =
        evaluate(src, srcKind, red.map_back(members)).value;
    CHECK(sourceValue == red.senseSign * targetValue + red.offset);
  }
}

const GvcInstance kSingleEdge =
    make_instance(2, {{0, 1}}, {0, 0}, {5}, {3}, {2});

}  // namespace

TEST_CASE("fold into the no-endpoint field") {
  const GvcReduction red = gvc_to_gvc1(kSingleEdge);
  CHECK(red.targetKind == ProblemKind::GVC1);
  CHECK(red.target.c == std::vector<double>{-1, -1});
  CHECK(red.target.q0 == std::vector<double>{1});
  CHECK(red.target.q1 == std::vector<double>{0});
  CHECK(red.target.q2 == std::vector<double>{0});
  CHECK(red.offset == 4);
  CHECK(red.senseSign == 1);
  CHECK_FALSE(red.complement);
  check_identity(kSingleEdge, ProblemKind::GVC, red);
}

TEST_CASE("fold into the both-endpoint field") {
  const GvcReduction red = gvc_to_gvc2(kSingleEdge);
  CHECK(red.targetKind == ProblemKind::GVC2);
  CHECK(red.target.c == std::vector<double>{-2, -2});
  CHECK(red.target.q2 == std::vector<double>{1});
  CHECK(red.offset == 5);
  check_identity(kSingleEdge, ProblemKind::GVC, red);
}

TEST_CASE("fold into an unconstrained quadratic") {
  const UbqpReduction red = gvc_to_ubqp(kSingleEdge);
  CHECK(red.target.a == std::vector<double>{-2, -2});
  CHECK(red.target.q == std::vector<double>{0.5});
  CHECK(red.offset == 5);
  for (unsigned mask = 0; mask < 4; ++mask) {
    const auto members = mask_members(2, mask);
    CHECK(evaluate(kSingleEdge, ProblemKind::GVC, members).value ==
          evaluate_ubqp(red.target, members) + red.offset);
  }
}

TEST_CASE("no-endpoint form to quadratic") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {1, -3}, {2}, {0}, {0});
  const UbqpReduction red = gvc1_to_ubqp(g);
  CHECK(red.target.a == std::vector<double>{-1, -5});
  CHECK(red.target.q == std::vector<double>{1});
  CHECK(red.offset == 2);
  for (unsigned mask = 0; mask < 4; ++mask) {
    const auto members = mask_members(2, mask);
    CHECK(evaluate(g, ProblemKind::GVC1, members).value ==
          evaluate_ubqp(red.target, members) + red.offset);
  }
}

TEST_CASE("both-endpoint form to quadratic and back") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {1, -3}, {0}, {0}, {4});
  const UbqpReduction fwd = gvc2_to_ubqp(g);
  CHECK(fwd.target.a == std::vector<double>{1, -3});
  CHECK(fwd.target.q == std::vector<double>{2});
  CHECK(fwd.offset == 0);

  const GvcReduction back = ubqp_to_gvc2(fwd.target);
  CHECK(back.targetKind == ProblemKind::GVC2);
  CHECK(back.offset == 0);
  CHECK(back.target == g);  // support graph round-trip

  const UbqpInstance u = random_ubqp(6, 0.6, -4, 4, 11);
  const GvcReduction red = ubqp_to_gvc2(u);
  for (unsigned mask = 0; mask < (1u << u.n); ++mask) {
    const auto members = mask_members(u.n, mask);
    CHECK(evaluate_ubqp(u, members) ==
          evaluate(red.target, red.targetKind, members).value + red.offset);
  }
}

TEST_CASE("composing the two folds matches the direct one") {
  const GvcReduction toG1 = gvc_to_gvc1(kSingleEdge);
  const UbqpReduction viaG1 = gvc1_to_ubqp(toG1.target);
  const UbqpReduction direct = gvc_to_ubqp(kSingleEdge);
  CHECK(viaG1.target == direct.target);
  CHECK(toG1.offset + viaG1.offset == direct.offset);
}

TEST_CASE("complement swaps the outer fields") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {1, -3}, {2}, {0}, {0});
  const GvcReduction red = gvc1_complement_gvc2(g, ProblemKind::GVC1);
  CHECK(red.targetKind == ProblemKind::GVC2);
  CHECK(red.target.c == std::vector<double>{-1, 3});
  CHECK(red.target.q2 == std::vector<double>{2});
  CHECK(red.offset == -2);  // sum of c
  CHECK(red.complement);
  CHECK(red.map_back({1}) == std::vector<int>{0});
  check_identity(g, ProblemKind::GVC1, red);

  // involution: complementing twice restores the instance
  const GvcReduction twice =
      gvc1_complement_gvc2(red.target, ProblemKind::GVC2);
  CHECK(twice.target == g);
  CHECK(twice.targetKind == ProblemKind::GVC1);
}

TEST_CASE("bipartite split to a two-sided quadratic") {
  const BipartitePartition part{{0}, {1}};
  const Bqp01Reduction red =
      bipartite_to_bqp01(kSingleEdge, part, ProblemKind::GVC);
  CHECK(red.target.m == 1);
  CHECK(red.target.n == 1);
  CHECK(red.target.a == std::vector<double>{-2});
  CHECK(red.target.b == std::vector<double>{-2});
  CHECK(red.target.q[0][0] == 1);  // folded weight, not halved
  CHECK(red.offset == 5);
  for (unsigned lm = 0; lm < 2; ++lm)
    for (unsigned rm = 0; rm < 2; ++rm) {
      const auto left = mask_members(1, lm);
      const auto right = mask_members(1, rm);
      CHECK(evaluate(kSingleEdge, ProblemKind::GVC,
                     red.map_back(left, right))
                .value ==
            evaluate_bqp01(red.target, left, right) + red.offset);
    }
}

TEST_CASE("cover-kind normalization") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {1, 2}, {0}, {3}, {1});

  const GvcReduction toBoth = vcpnew_normalize(g, ProblemKind::VCOP);
  CHECK(toBoth.targetKind == ProblemKind::VCOP);
  CHECK(toBoth.target.q2 == std::vector<double>{-2});
  CHECK(toBoth.offset == 3);
  check_identity(g, ProblemKind::VCPNEW, toBoth);

  const GvcReduction toOne = vcpnew_normalize(g, ProblemKind::VCUP);
  CHECK(toOne.targetKind == ProblemKind::VCUP);
  CHECK(toOne.target.q1 == std::vector<double>{2});
  CHECK(toOne.offset == 1);
  check_identity(g, ProblemKind::VCPNEW, toOne);

  const GvcReduction toPlain = vcpnew_to_mwvcp(g);
  CHECK(toPlain.targetKind == ProblemKind::MWVCP);
  CHECK(toPlain.target.c == std::vector<double>{-1, 0});
  CHECK(toPlain.offset == 5);
  check_identity(g, ProblemKind::VCPNEW, toPlain);
}

TEST_CASE("independent-kind normalization") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {4, 1}, {2}, {3}, {0});

  const GvcReduction toZero = ispnew_normalize(g, ProblemKind::ISOP);
  CHECK(toZero.target.q0 == std::vector<double>{-1});
  CHECK(toZero.offset == 3);
  check_identity(g, ProblemKind::ISPNEW, toZero);

  const GvcReduction toOne = ispnew_normalize(g, ProblemKind::ISUP);
  CHECK(toOne.target.q1 == std::vector<double>{1});
  CHECK(toOne.offset == 2);
  check_identity(g, ProblemKind::ISPNEW, toOne);

  const GvcReduction toPlain = ispnew_to_mwisp(g);
  CHECK(toPlain.targetKind == ProblemKind::MWISP);
  CHECK(toPlain.target.c == std::vector<double>{5, 2});
  CHECK(toPlain.offset == 2);
  check_identity(g, ProblemKind::ISPNEW, toPlain);
}

TEST_CASE("independent-set maximization as cover minimization") {
  const GvcInstance g = make_instance(2, {{0, 1}}, {4, 1}, {2}, {3}, {0});
  const GvcReduction red = ispnew_complement_vcpnew(g);
  CHECK(red.targetKind == ProblemKind::VCPNEW);
  CHECK(red.senseSign == -1);
  CHECK(red.complement);
  CHECK(red.offset == 5);  // sum of c
  CHECK(red.target.c == std::vector<double>{4, 1});
  CHECK(red.target.q1 == std::vector<double>{-3});
  CHECK(red.target.q2 == std::vector<double>{-2});
  check_identity(g, ProblemKind::ISPNEW, red);

  // the independent optimum 7 is the complement of the cover optimum -2
  const OracleResult best = brute_force(g, ProblemKind::ISPNEW);
  const OracleResult worst = brute_force(red.target, ProblemKind::VCPNEW);
  CHECK(best.value == 7);
  CHECK(worst.value == -2);
  CHECK(best.value == red.senseSign * worst.value + red.offset);
  CHECK(red.map_back(worst.subset) == best.subset);
}

TEST_CASE("optimum transport on random instances") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    GeneratorConfig cfg;
    cfg.family = Family::General;
    cfg.n = 7;
    cfg.seed = seed;
    const GvcInstance g = generate(cfg).inst;

    const double opt = brute_force(g, ProblemKind::GVC).value;
    const GvcReduction one = gvc_to_gvc1(g);
    const GvcReduction two = gvc_to_gvc2(g);
    const UbqpReduction quad = gvc_to_ubqp(g);
    CHECK(opt ==
          brute_force(one.target, ProblemKind::GVC1).value + one.offset);
    CHECK(opt ==
          brute_force(two.target, ProblemKind::GVC2).value + two.offset);
    CHECK(opt == brute_force_ubqp(quad.target).value + quad.offset);
  }
}

TEST_CASE("reductions refuse the fields they cannot fold") {
  const GvcInstance g =
      make_instance(2, {{0, 1}}, {1, 1}, {kInf}, {0}, {0});
  CHECK_THROWS_AS(gvc_to_gvc1(g), PreconditionError);
  CHECK_THROWS_AS(gvc_to_ubqp(g), PreconditionError);
  CHECK_THROWS_AS(gvc1_to_ubqp(g), PreconditionError);
}
