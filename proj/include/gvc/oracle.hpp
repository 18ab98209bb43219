#pragma once

// Exhaustive reference solvers (Gray-code subset walks) and seeded
// random instance generators.  Values found by enumeration are
// re-evaluated from scratch before being returned, so the reported
// value always matches evaluate() on the reported subset.

#include <cstdint>
#include <optional>

#include "gvc/instance.hpp"

namespace gvc {

struct OracleResult {
  double value = 0.0;
  std::vector<int> subset;        // sorted, 0-based
  std::uint64_t optimaCount = 0;  // 0 when the solver does not count
};

inline constexpr int kOracleMaxN = 26;

// Optimal subset under the kind's objective and feasibility rule.
// Ties break toward the smallest subset bitmask (vertex i <-> bit i).
OracleResult brute_force(const GvcInstance& inst, ProblemKind kind);

OracleResult brute_force_ubqp(const UbqpInstance& inst);

// Enumerates the smaller side only; the other side is filled greedily
// per column.  optimaCount matches full two-sided enumeration.
struct Bqp01Result {
  double value = 0.0;
  std::vector<int> left;
  std::vector<int> right;
  std::uint64_t optimaCount = 0;
};

Bqp01Result brute_force_bqp01_small_side(const Bqp01Instance& inst);

enum class Family {
  General,           // all weights free, kind gvc
  Gvc1,              // q1 = q2 = 0
  Gvc2,              // q0 = q1 = 0
  VcpnewFeasible,    // kind vcpnew, q0 = 0
  IspnewFeasible,    // kind ispnew, q2 = 0
  Bipartite,         // random bipartition, crossing edges only
  HlMonotone,        // q0 >= q1 >= q2 >= 0, c >= 0
  RatioBounded,      // 0 <= q2 <= alpha*q1, 0 <= q1 <= beta*q0, c >= 0
  Band,              // q in [K, alpha*K], c >= 0
  NonpositiveLifted, // q2 - 2*q1 + q0 <= 0 on every edge
  Uniform,           // c = gamma, q2 = delta, q0 = q1 = 0, kind gvc2
};

const char* family_name(Family family);
std::optional<Family> family_from_name(const std::string& name);

struct GeneratorConfig {
  Family family = Family::General;
  int n = 8;
  double density = 0.5;
  int weightLo = -5;
  int weightHi = 5;
  double alpha = 2.0;  // RatioBounded / Band
  double beta = 2.0;   // RatioBounded
  long long bandK = 1;
  double gamma = 1.0;  // Uniform
  double delta = -1.0;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  GvcInstance inst;
  ProblemKind kind = ProblemKind::GVC;
  std::optional<BipartitePartition> partition;
};

// Deterministic for a fixed config.  Family constraints are re-checked
// on the emitted instance; a violation is a logic error, not a throw
// the caller should see, so it surfaces as ConfigError.
GeneratedInstance generate(const GeneratorConfig& config);

UbqpInstance random_ubqp(int n, double density, int lo, int hi,
                         std::uint64_t seed);

Bqp01Instance random_bqp01(int m, int n, double density, int lo, int hi,
                           std::uint64_t seed);

}  // namespace gvc
