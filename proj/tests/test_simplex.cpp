#include <doctest.h>

#include <cmath>
#include <limits>

#include "gvc/simplex.hpp"

using namespace gvc;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
const double kTol = 1e-9;
}  // namespace

TEST_CASE("box-constrained minimum") {
  // min -x - y  s.t. x + y <= 1, x,y in [0,1]
  const SimplexResult r = simplex_solve(
      {-1, -1}, {0, 0}, {1, 1}, {{{{0, 1.0}, {1, 1.0}}, 'L', 1}});
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(-1).epsilon(kTol));
  CHECK(r.x[0] + r.x[1] == doctest::Approx(1).epsilon(kTol));
}

TEST_CASE("equalities mix with bounds") {
  // min x  s.t. x + y == 1.5, y <= 1
  const SimplexResult r =
      simplex_solve({1, 0}, {0, 0}, {kInf, 1}, {{{{0, 1.0}, {1, 1.0}}, 'E', 1.5}});
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.x[0] == doctest::Approx(0.5).epsilon(kTol));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(kTol));
}

TEST_CASE("greater-than rows") {
  // min 2x + 3y  s.t. x + y >= 2, x - y >= -1
  const SimplexResult r = simplex_solve(
      {2, 3}, {0, 0}, {kInf, kInf},
      {{{{0, 1.0}, {1, 1.0}}, 'G', 2}, {{{0, 1.0}, {1, -1.0}}, 'G', -1}});
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(4).epsilon(kTol));  // x=2, y=0
}

TEST_CASE("infeasibility is detected") {
  // x <= 1 (bound) but x >= 2 (row)
  const SimplexResult r =
      simplex_solve({1}, {0}, {1}, {{{{0, 1.0}}, 'G', 2}});
  CHECK(r.status == SimplexResult::Status::Infeasible);

  const SimplexResult contradictory = simplex_solve(
      {0, 0}, {0, 0}, {kInf, kInf},
      {{{{0, 1.0}, {1, 1.0}}, 'E', 1}, {{{0, 1.0}, {1, 1.0}}, 'E', 2}});
  CHECK(contradictory.status == SimplexResult::Status::Infeasible);
}

TEST_CASE("unboundedness is detected") {
  const SimplexResult r = simplex_solve({-1}, {0}, {kInf}, {});
  CHECK(r.status == SimplexResult::Status::Unbounded);
}

TEST_CASE("degenerate pricing does not cycle") {
  // the classic cycling construction for most-negative-cost pricing
  const SimplexResult r = simplex_solve(
      {-0.75, 150, -0.02, 6}, {0, 0, 0, 0}, {kInf, kInf, kInf, kInf},
      {{{{0, 0.25}, {1, -60.0}, {2, -0.04}, {3, 9.0}}, 'L', 0},
       {{{0, 0.5}, {1, -90.0}, {2, -0.02}, {3, 3.0}}, 'L', 0},
       {{{2, 1.0}}, 'L', 1}});
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(-0.05).epsilon(1e-9));
}

TEST_CASE("negative lower bounds") {
  // min x + y  s.t. x + 2y >= -3, x,y in [-2, 2]
  const SimplexResult r = simplex_solve(
      {1, 1}, {-2, -2}, {2, 2}, {{{{0, 1.0}, {1, 2.0}}, 'G', -3}});
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(-2.5).epsilon(kTol));  // x=-2, y=-0.5
}

TEST_CASE("reported point is basic and consistent") {
  const SimplexResult r = simplex_solve(
      {3, -2, 1}, {0, 0, 0}, {1, 1, 1},
      {{{{0, 1.0}, {1, 1.0}, {2, 1.0}}, 'E', 2},
       {{{0, 1.0}, {1, -1.0}}, 'L', 0}});
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.basic);
  const double recomputed = 3 * r.x[0] - 2 * r.x[1] + r.x[2];
  CHECK(recomputed == doctest::Approx(r.objective).epsilon(kTol));
  CHECK(r.x[0] + r.x[1] + r.x[2] == doctest::Approx(2).epsilon(kTol));
  CHECK(r.x[0] - r.x[1] <= kTol);
}
