#pragma once

// Randomized property suites.  Each suite runs `trials` seeded checks
// against the exhaustive oracles and reports failures with a replayable
// instance dump.  A suite with zero trials passes vacuously.

#include <cstdint>
#include <string>
#include <vector>

namespace gvc {

struct SuiteResult {
  std::string suite;
  int checks = 0;    // individual assertions executed
  int failures = 0;  // assertions that did not hold
  std::vector<std::string> notes;

  bool pass() const { return failures == 0; }
};

// Offset identity (exhaustive over feasible subsets) and optimum
// transport for every reduction operation.
SuiteResult verify_reductions(int trials, std::uint64_t seed);

// Basic optimal solutions of all nine formulations keep every x
// coordinate within 1e-7 of {0, 1/2, 1}; LP bound never crosses the
// enumerated integer optimum.
SuiteResult verify_halfint(int trials, std::uint64_t seed);

// Rounding ratio stays within max{2, alpha, alpha*beta} on chained
// instances, and within max{2, alpha} on banded ones (trials/3 of
// those).
SuiteResult verify_rounding(int trials, std::uint64_t seed);

// Min-cut case, bipartite flow solver, trivial nonnegative case and
// small-side enumeration each agree exactly with brute force.
SuiteResult verify_flow(int trials, std::uint64_t seed);

// Depth-k vertex branching with oracle leaves equals the oracle.
SuiteResult verify_branch(int trials, std::uint64_t seed);

// The folded-cover rounding heuristic stays within
// (2 + delta) / (1 + delta) of the cover optimum.
SuiteResult verify_transfer(int trials, std::uint64_t seed);

// Structure of optimal subsets on uniform instances with c = -q2.
SuiteResult verify_ugvc2(int trials, std::uint64_t seed);

// Clique cuts tighten the relaxation without cutting integer points.
SuiteResult verify_cuts(int trials, std::uint64_t seed);

// The three relaxations of the full objective report equal optima.
SuiteResult verify_lp_equivalence(int trials, std::uint64_t seed);

using SuiteFn = SuiteResult (*)(int trials, std::uint64_t seed);

struct SuiteEntry {
  const char* name;
  SuiteFn run;
};

// The suites exposed by the command line, in documentation order.
const std::vector<SuiteEntry>& verify_suites();

std::string format_suite(const SuiteResult& result);

}  // namespace gvc
