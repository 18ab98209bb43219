#include "gvc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "gvc/instance.hpp"
#include "gvc/io.hpp"
#include "gvc/lp.hpp"
#include "gvc/oracle.hpp"
#include "gvc/reductions.hpp"
#include "gvc/solvers.hpp"

namespace gvc {

namespace {

constexpr double kTol = 1e-7;
constexpr int kMaxNotes = 6;

using Rng = std::mt19937_64;

long long rand_int(Rng& rng, long long lo, long long hi) {
  return lo +
         static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double rand_unit(Rng& rng) { return (rng() >> 11) * 0x1.0p-53; }

// splitmix-style decorrelation of (seed, salt) pairs.
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<int> mask_members(std::uint32_t mask) {
  std::vector<int> members;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) members.push_back(v);
  return members;
}

bool feasible_mask(const GvcInstance& inst, ProblemKind kind,
                   std::uint32_t mask) {
  const KindInfo& info = kind_info(kind);
  if (info.feasible == Feasible::AnySubset) return true;
  for (const Edge& e : inst.edges) {
    const int ends =
        static_cast<int>((mask >> e.u) & 1u) + static_cast<int>((mask >> e.v) & 1u);
    if (info.feasible == Feasible::VertexCover && ends == 0) return false;
    if (info.feasible == Feasible::IndependentSet && ends == 2) return false;
  }
  return true;
}

struct Suite {
  SuiteResult result;

  explicit Suite(std::string name) { result.suite = std::move(name); }

  template <class NoteFn>
  void check(bool ok, NoteFn&& note) {
    ++result.checks;
    if (ok) return;
    ++result.failures;
    if (static_cast<int>(result.notes.size()) < kMaxNotes)
      result.notes.push_back(note());
    else if (static_cast<int>(result.notes.size()) == kMaxNotes)
      result.notes.push_back("(more failures suppressed)");
  }

  void fail(const std::string& note) {
    check(false, [&] { return note; });
  }
};

std::string num(double v) { return format_weight(v); }

std::string dump_gvc(const GvcInstance& inst, ProblemKind kind) {
  return serialize(inst, kind, std::nullopt, std::nullopt);
}

GeneratedInstance gen(Family family, int n, double density, int lo, int hi,
                      std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.family = family;
  cfg.n = n;
  cfg.density = density;
  cfg.weightLo = lo;
  cfg.weightHi = hi;
  cfg.seed = seed;
  return generate(cfg);
}

GvcInstance zero_field(GvcInstance inst, int field) {
  auto& q = field == 0 ? inst.q0 : field == 1 ? inst.q1 : inst.q2;
  std::fill(q.begin(), q.end(), 0.0);
  return inst;
}

// ---------------------------------------------------------------- reductions

// Exhaustive offset identity plus optimum transport for a reduction
// whose target is another vertex-subset problem.
void check_gvc_reduction(Suite& s, const std::string& op, int trial,
                         const GvcInstance& src, ProblemKind srcKind,
                         const GvcReduction& red) {
  const GvcInstance& dst = red.target;
  std::string why;
  for (std::uint32_t mask = 0; why.empty() && mask < (1u << dst.n); ++mask) {
    if (!feasible_mask(dst, red.targetKind, mask)) continue;
    const std::vector<int> members = mask_members(mask);
    const double dstVal = evaluate(dst, red.targetKind, members).value;
    const double srcVal = evaluate(src, srcKind, red.map_back(members)).value;
    const double want = red.senseSign * dstVal + red.offset;
    if (srcVal != want)
      why = "mask " + std::to_string(mask) + ": source " + num(srcVal) +
            " != " + std::to_string(red.senseSign) + "*" + num(dstVal) +
            " + " + num(red.offset);
  }
  if (why.empty()) {
    const OracleResult so = brute_force(src, srcKind);
    const OracleResult dr = brute_force(dst, red.targetKind);
    const double mapped = red.senseSign * dr.value + red.offset;
    const double back = evaluate(src, srcKind, red.map_back(dr.subset)).value;
    if (so.value != mapped)
      why = "optimum " + num(so.value) + " not transported from " +
            num(dr.value);
    else if (back != so.value)
      why = "mapped-back optimum evaluates to " + num(back) + " instead of " +
            num(so.value);
  }
  s.check(why.empty(), [&] {
    return op + " trial " + std::to_string(trial) + ": " + why + "\n" +
           dump_gvc(src, srcKind);
  });
}

void check_ubqp_reduction(Suite& s, const std::string& op, int trial,
                          const GvcInstance& src, ProblemKind srcKind,
                          const UbqpReduction& red) {
  std::string why;
  for (std::uint32_t mask = 0; why.empty() && mask < (1u << src.n); ++mask) {
    const std::vector<int> members = mask_members(mask);
    const double dstVal = evaluate_ubqp(red.target, members);
    const double srcVal = evaluate(src, srcKind, members).value;
    if (srcVal != dstVal + red.offset)
      why = "mask " + std::to_string(mask) + ": source " + num(srcVal) +
            " != " + num(dstVal) + " + " + num(red.offset);
  }
  if (why.empty()) {
    const OracleResult so = brute_force(src, srcKind);
    const OracleResult dr = brute_force_ubqp(red.target);
    if (so.value != dr.value + red.offset)
      why = "optimum " + num(so.value) + " not transported from " +
            num(dr.value);
  }
  s.check(why.empty(), [&] {
    return op + " trial " + std::to_string(trial) + ": " + why + "\n" +
           dump_gvc(src, srcKind);
  });
}

void check_ubqp_to_gvc2(Suite& s, int trial, const UbqpInstance& src,
                        const GvcReduction& red) {
  std::string why;
  for (std::uint32_t mask = 0; why.empty() && mask < (1u << src.n); ++mask) {
    const std::vector<int> members = mask_members(mask);
    const double dstVal = evaluate(red.target, red.targetKind, members).value;
    const double srcVal = evaluate_ubqp(src, members);
    if (srcVal != dstVal + red.offset)
      why = "mask " + std::to_string(mask) + ": source " + num(srcVal) +
            " != " + num(dstVal) + " + " + num(red.offset);
  }
  if (why.empty()) {
    const OracleResult so = brute_force_ubqp(src);
    const OracleResult dr = brute_force(red.target, red.targetKind);
    if (so.value != dr.value + red.offset)
      why = "optimum " + num(so.value) + " not transported from " +
            num(dr.value);
  }
  s.check(why.empty(), [&] {
    return "ubqp_to_gvc2 trial " + std::to_string(trial) + ": " + why + "\n" +
           serialize(src, std::nullopt);
  });
}

void check_bqp01_reduction(Suite& s, const std::string& op, int trial,
                           const GvcInstance& src, ProblemKind srcKind,
                           const BipartitePartition& part,
                           const Bqp01Reduction& red) {
  const int m = red.target.m;
  const int n = red.target.n;
  std::string why;
  for (std::uint32_t lm = 0; why.empty() && lm < (1u << m); ++lm) {
    const std::vector<int> left = mask_members(lm);
    for (std::uint32_t rm = 0; why.empty() && rm < (1u << n); ++rm) {
      const std::vector<int> right = mask_members(rm);
      const double dstVal = evaluate_bqp01(red.target, left, right);
      const double srcVal =
          evaluate(src, srcKind, red.map_back(left, right)).value;
      if (srcVal != dstVal + red.offset)
        why = "assignment (" + std::to_string(lm) + "," + std::to_string(rm) +
              "): source " + num(srcVal) + " != " + num(dstVal) + " + " +
              num(red.offset);
    }
  }
  if (why.empty()) {
    const OracleResult so = brute_force(src, srcKind);
    const Bqp01Result dr = brute_force_bqp01_small_side(red.target);
    const double back =
        evaluate(src, srcKind, red.map_back(dr.left, dr.right)).value;
    if (so.value != dr.value + red.offset)
      why = "optimum " + num(so.value) + " not transported from " +
            num(dr.value);
    else if (back != so.value)
      why = "mapped-back optimum evaluates to " + num(back) + " instead of " +
            num(so.value);
  }
  s.check(why.empty(), [&] {
    return op + " trial " + std::to_string(trial) + ": " + why + "\n" +
           serialize(src, srcKind, part, std::nullopt);
  });
}

}  // namespace

SuiteResult verify_reductions(int trials, std::uint64_t seed) {
  Suite s("reductions");
  for (int t = 0; t < trials; ++t) {
    const auto salt = [&](std::uint64_t op) {
      return mix(seed, static_cast<std::uint64_t>(t) * 64 + op);
    };
    const int n = 1 + static_cast<int>(salt(0) % 9);   // 1..9
    const int bn = 2 + static_cast<int>(salt(1) % 8);  // 2..9

    const GvcInstance general =
        gen(Family::General, n, 0.5, -6, 6, salt(2)).inst;
    const GvcInstance g1 = gen(Family::Gvc1, n, 0.5, -6, 6, salt(3)).inst;
    const GvcInstance g2 = gen(Family::Gvc2, n, 0.5, -6, 6, salt(4)).inst;
    const GeneratedInstance bip =
        gen(Family::Bipartite, bn, 0.6, -6, 6, salt(5));
    const GvcInstance vc =
        gen(Family::VcpnewFeasible, n, 0.5, -6, 6, salt(6)).inst;
    const GvcInstance is =
        gen(Family::IspnewFeasible, n, 0.5, -6, 6, salt(7)).inst;
    const UbqpInstance ub = random_ubqp(n, 0.5, -6, 6, salt(8));

    check_gvc_reduction(s, "gvc_to_gvc1", t, general, ProblemKind::GVC,
                        gvc_to_gvc1(general));
    check_gvc_reduction(s, "gvc_to_gvc2", t, general, ProblemKind::GVC,
                        gvc_to_gvc2(general));
    check_ubqp_reduction(s, "gvc_to_ubqp", t, general, ProblemKind::GVC,
                         gvc_to_ubqp(general));
    check_ubqp_reduction(s, "gvc1_to_ubqp", t, g1, ProblemKind::GVC1,
                         gvc1_to_ubqp(g1));
    check_ubqp_reduction(s, "gvc2_to_ubqp", t, g2, ProblemKind::GVC2,
                         gvc2_to_ubqp(g2));
    check_ubqp_to_gvc2(s, t, ub, ubqp_to_gvc2(ub));
    check_gvc_reduction(s, "gvc1_complement_gvc2", t, g1, ProblemKind::GVC1,
                        gvc1_complement_gvc2(g1, ProblemKind::GVC1));
    check_gvc_reduction(s, "gvc2_complement_gvc1", t, g2, ProblemKind::GVC2,
                        gvc1_complement_gvc2(g2, ProblemKind::GVC2));

    const GvcInstance bipAsGvc1 = zero_field(zero_field(bip.inst, 1), 2);
    const GvcInstance bipAsGvc2 = zero_field(zero_field(bip.inst, 0), 1);
    check_bqp01_reduction(
        s, "bipartite_to_bqp01/gvc", t, bip.inst, ProblemKind::GVC,
        *bip.partition,
        bipartite_to_bqp01(bip.inst, *bip.partition, ProblemKind::GVC));
    check_bqp01_reduction(
        s, "bipartite_to_bqp01/gvc1", t, bipAsGvc1, ProblemKind::GVC1,
        *bip.partition,
        bipartite_to_bqp01(bipAsGvc1, *bip.partition, ProblemKind::GVC1));
    check_bqp01_reduction(
        s, "bipartite_to_bqp01/gvc2", t, bipAsGvc2, ProblemKind::GVC2,
        *bip.partition,
        bipartite_to_bqp01(bipAsGvc2, *bip.partition, ProblemKind::GVC2));

    check_gvc_reduction(s, "vcpnew_normalize/vcop", t, vc, ProblemKind::VCPNEW,
                        vcpnew_normalize(vc, ProblemKind::VCOP));
    check_gvc_reduction(s, "vcpnew_normalize/vcup", t, vc, ProblemKind::VCPNEW,
                        vcpnew_normalize(vc, ProblemKind::VCUP));
    check_gvc_reduction(s, "vcpnew_to_mwvcp", t, vc, ProblemKind::VCPNEW,
                        vcpnew_to_mwvcp(vc));
    check_gvc_reduction(s, "ispnew_normalize/isop", t, is, ProblemKind::ISPNEW,
                        ispnew_normalize(is, ProblemKind::ISOP));
    check_gvc_reduction(s, "ispnew_normalize/isup", t, is, ProblemKind::ISPNEW,
                        ispnew_normalize(is, ProblemKind::ISUP));
    check_gvc_reduction(s, "ispnew_to_mwisp", t, is, ProblemKind::ISPNEW,
                        ispnew_to_mwisp(is));
    check_gvc_reduction(s, "ispnew_complement_vcpnew", t, is,
                        ProblemKind::ISPNEW, ispnew_complement_vcpnew(is));
  }
  return s.result;
}

SuiteResult verify_halfint(int trials, std::uint64_t seed) {
  Suite s("halfint");
  struct Case {
    ProblemKind formulation;
    Family family;
    int zeroField;  // -1 = use the family output as-is
  };
  const Case cases[] = {
      {ProblemKind::GVC, Family::General, -1},
      {ProblemKind::GVC1, Family::Gvc1, -1},
      {ProblemKind::GVC2, Family::Gvc2, -1},
      {ProblemKind::VCPNEW, Family::VcpnewFeasible, -1},
      {ProblemKind::VCOP, Family::VcpnewFeasible, 1},
      {ProblemKind::VCUP, Family::VcpnewFeasible, 2},
      {ProblemKind::ISPNEW, Family::IspnewFeasible, -1},
      {ProblemKind::ISOP, Family::IspnewFeasible, 1},
      {ProblemKind::ISUP, Family::IspnewFeasible, 0},
  };
  for (int t = 0; t < trials; ++t) {
    int c = 0;
    for (const Case& cs : cases) {
      const std::uint64_t salt =
          mix(seed, static_cast<std::uint64_t>(t) * 16 + c++);
      const int n = 2 + static_cast<int>(salt % 11);  // 2..12
      GvcInstance inst = gen(cs.family, n, 0.5, -5, 5, salt).inst;
      if (cs.zeroField >= 0) inst = zero_field(inst, cs.zeroField);

      std::string why;
      const LpModel model = build(inst, cs.formulation);
      const LpSolution sol = solve_lp(model);
      if (sol.status != LpSolution::Status::Optimal) {
        why = "relaxation did not report an optimum";
      } else {
        const HalfIntegralCheck hc = check_half_integral(model, sol);
        const double ip = brute_force(inst, cs.formulation).value;
        const double slack = kTol * (1.0 + std::abs(ip));
        if (!hc.ok)
          why = "x_" + std::to_string(hc.worstVertex + 1) + " is " +
                num(sol.values[model.xVar[hc.worstVertex]]) +
                ", off the half-integral grid by " + num(hc.worstDist);
        else if (!model.maximize && sol.reported > ip + slack)
          why = "relaxation value " + num(sol.reported) +
                " exceeds integer optimum " + num(ip);
        else if (model.maximize && sol.reported < ip - slack)
          why = "relaxation value " + num(sol.reported) +
                " below integer optimum " + num(ip);
      }
      s.check(why.empty(), [&] {
        return std::string(kind_name(cs.formulation)) + " trial " +
               std::to_string(t) + ": " + why + "\n" +
               dump_gvc(inst, cs.formulation);
      });
    }
  }
  return s.result;
}

namespace {

// Draws from `family` until the enumerated optimum is positive, so that
// approximation ratios are well defined.
GvcInstance positive_optimum_instance(Family family, int n, double density,
                                      int hi, double alpha, double beta,
                                      long long bandK, std::uint64_t salt,
                                      std::string* giveUp) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    GeneratorConfig cfg;
    cfg.family = family;
    cfg.n = n;
    cfg.density = density;
    cfg.weightLo = 0;
    cfg.weightHi = hi;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.bandK = bandK;
    cfg.seed = mix(salt, attempt);
    GvcInstance inst = generate(cfg).inst;
    if (brute_force(inst, ProblemKind::GVC).value > 0.0) return inst;
  }
  *giveUp = "could not draw an instance with a positive optimum";
  return GvcInstance{};
}

}  // namespace

SuiteResult verify_rounding(int trials, std::uint64_t seed) {
  Suite s("rounding");
  const double grid[] = {1.0, 1.5, 2.0, 3.0};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t salt = mix(seed, t);
    const double alpha = grid[salt % 4];
    const double beta = grid[(salt >> 2) % 4];
    const int n = 3 + static_cast<int>((salt >> 4) % 8);  // 3..10
    std::string giveUp;
    const GvcInstance inst = positive_optimum_instance(
        Family::RatioBounded, n, 0.6, 6, alpha, beta, 1, salt, &giveUp);
    if (!giveUp.empty()) {
      s.fail("ratio trial " + std::to_string(t) + ": " + giveUp);
      continue;
    }
    RoundingGuarantee g;
    g.mode = RoundingGuarantee::Mode::AlphaBeta;
    g.alpha = alpha;
    g.beta = beta;
    const ApproxReport report = verify_ratio(inst, g);
    std::string why;
    if (!report.preconditionsHold)
      why = "hypotheses rejected: " + report.diagnostic;
    else if (!report.ratioDefined)
      why = "optimum not positive";
    else if (!report.withinBound)
      why = "ratio " + num(report.ratio) + " exceeds bound " +
            num(report.bound);
    s.check(why.empty(), [&] {
      return "ratio trial " + std::to_string(t) + " (alpha " + num(alpha) +
             ", beta " + num(beta) + "): " + why + "\n" +
             dump_gvc(inst, ProblemKind::GVC);
    });
  }
  const int bandTrials = trials / 3;
  const double bandGrid[] = {1.5, 2.0, 3.0};
  for (int t = 0; t < bandTrials; ++t) {
    const std::uint64_t salt = mix(seed, 0x10000 + t);
    const double bandAlpha = bandGrid[salt % 3];
    const long long bandK = 1 + static_cast<long long>((salt >> 2) % 3);
    const int n = 3 + static_cast<int>((salt >> 4) % 8);
    std::string giveUp;
    const GvcInstance inst = positive_optimum_instance(
        Family::Band, n, 0.6, 5, bandAlpha, 1.0, bandK, salt, &giveUp);
    if (!giveUp.empty()) {
      s.fail("band trial " + std::to_string(t) + ": " + giveUp);
      continue;
    }
    RoundingGuarantee g;
    g.mode = RoundingGuarantee::Mode::Band;
    g.bandK = static_cast<double>(bandK);
    g.bandAlpha = bandAlpha;
    const ApproxReport report = verify_ratio(inst, g);
    std::string why;
    if (!report.preconditionsHold)
      why = "hypotheses rejected: " + report.diagnostic;
    else if (!report.ratioDefined)
      why = "optimum not positive";
    else if (!report.withinBound)
      why = "ratio " + num(report.ratio) + " exceeds bound " +
            num(report.bound);
    s.check(why.empty(), [&] {
      return "band trial " + std::to_string(t) + " (K " +
             std::to_string(bandK) + ", alpha " + num(bandAlpha) + "): " + why +
             "\n" + dump_gvc(inst, ProblemKind::GVC);
    });
  }
  return s.result;
}

SuiteResult verify_flow(int trials, std::uint64_t seed) {
  Suite s("flow");
  for (int t = 0; t < trials; ++t) {
    const auto salt = [&](std::uint64_t block) {
      return mix(seed, static_cast<std::uint64_t>(t) * 8 + block);
    };

    {  // nonpositive-lifted min-cut case, reached through the reduction
      const int n = 2 + static_cast<int>(salt(0) % 11);
      const GvcInstance inst =
          gen(Family::NonpositiveLifted, n, 0.5, -5, 5, salt(0)).inst;
      const UbqpReduction red = gvc_to_ubqp(inst);
      std::string why;
      try {
        const OracleResult got = solve_mincut_case(red.target);
        const OracleResult want = brute_force_ubqp(red.target);
        const double gvcOpt = brute_force(inst, ProblemKind::GVC).value;
        if (got.value != want.value)
          why = "min-cut value " + num(got.value) + " != oracle " +
                num(want.value);
        else if (evaluate_ubqp(red.target, got.subset) != got.value)
          why = "reported subset does not reproduce the value";
        else if (got.value + red.offset != gvcOpt)
          why = "offset chain broke: " + num(got.value) + " + " +
                num(red.offset) + " != " + num(gvcOpt);
      } catch (const Error& err) {
        why = err.what();
      }
      s.check(why.empty(), [&] {
        return "mincut trial " + std::to_string(t) + ": " + why + "\n" +
               dump_gvc(inst, ProblemKind::GVC);
      });
    }

    {  // bipartite flow solver on nonnegative folded weights
      Rng rng(salt(1));
      const int n = 2 + static_cast<int>(rand_int(rng, 0, 9));
      GeneratedInstance bip = gen(Family::Bipartite, n, 0.6, -5, 5, salt(2));
      GvcInstance inst = bip.inst;
      for (int e = 0; e < inst.m(); ++e) {
        const long long mid = rand_int(rng, -4, 4);
        inst.q1[e] = static_cast<double>(mid);
        inst.q0[e] = static_cast<double>(mid + rand_int(rng, 0, 4));
        inst.q2[e] = static_cast<double>(mid + rand_int(rng, 0, 4));
      }
      std::string why;
      try {
        const OracleResult got = solve_bipartite_flow(inst, *bip.partition);
        const OracleResult want = brute_force(inst, ProblemKind::GVC);
        if (got.value != want.value)
          why = "flow value " + num(got.value) + " != oracle " +
                num(want.value);
        else if (evaluate(inst, ProblemKind::GVC, got.subset).value !=
                 got.value)
          why = "reported subset does not reproduce the value";
      } catch (const Error& err) {
        why = err.what();
      }
      s.check(why.empty(), [&] {
        return "bipartite trial " + std::to_string(t) + ": " + why + "\n" +
               serialize(inst, ProblemKind::GVC, bip.partition, std::nullopt);
      });
    }

    {  // small-side enumeration against the full two-sided sweep
      Rng rng(salt(3));
      const int m = 1 + static_cast<int>(rand_int(rng, 0, 5));
      const int nMax = std::min(10, 16 - m);
      const int n = 1 + static_cast<int>(rand_int(rng, 0, nMax - 1));
      const Bqp01Instance inst = random_bqp01(m, n, 0.6, -5, 5, salt(4));
      const Bqp01Result got = brute_force_bqp01_small_side(inst);
      double best = 0.0;
      std::uint64_t count = 0;
      for (std::uint32_t lm = 0; lm < (1u << m); ++lm) {
        const std::vector<int> left = mask_members(lm);
        for (std::uint32_t rm = 0; rm < (1u << n); ++rm) {
          const double val = evaluate_bqp01(inst, left, mask_members(rm));
          if (lm == 0 && rm == 0) {
            best = val;
            count = 1;
          } else if (val < best) {
            best = val;
            count = 1;
          } else if (val == best) {
            ++count;
          }
        }
      }
      std::string why;
      if (got.value != best)
        why = "small-side value " + num(got.value) + " != full sweep " +
              num(best);
      else if (got.optimaCount != count)
        why = "optimum count " + std::to_string(got.optimaCount) + " != " +
              std::to_string(count);
      else if (evaluate_bqp01(inst, got.left, got.right) != got.value)
        why = "reported assignment does not reproduce the value";
      s.check(why.empty(), [&] {
        return "bqp01 trial " + std::to_string(t) + ": " + why + "\n" +
               serialize(inst, std::nullopt);
      });
    }

    {  // nonnegative data: the empty set is optimal
      const int n = 1 + static_cast<int>(salt(5) % 12);
      const UbqpInstance inst = random_ubqp(n, 0.5, 0, 5, salt(6));
      const OracleResult got = solve_trivial_nonneg(inst);
      const OracleResult want = brute_force_ubqp(inst);
      s.check(got.value == want.value && got.value == 0.0 &&
                  got.subset.empty(),
              [&] {
                return "trivial trial " + std::to_string(t) +
                       ": nonnegative case mismatch\n" +
                       serialize(inst, std::nullopt);
              });
    }
  }
  return s.result;
}

SuiteResult verify_branch(int trials, std::uint64_t seed) {
  Suite s("branch");
  const SubSolver leaf = [](const GvcInstance& g) {
    return brute_force(g, ProblemKind::GVC2);
  };
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t salt = mix(seed, t);
    const int n = 2 + static_cast<int>(salt % 11);  // 2..12
    const int depth = 1 + t % 4;
    const GvcInstance inst = gen(Family::Gvc2, n, 0.5, -5, 5, salt).inst;
    std::string why;
    try {
      const OracleResult got = branch_solve(inst, depth, leaf);
      const OracleResult want = brute_force(inst, ProblemKind::GVC2);
      if (got.value != want.value)
        why = "depth-" + std::to_string(depth) + " branching got " +
              num(got.value) + ", oracle " + num(want.value);
      else if (evaluate(inst, ProblemKind::GVC2, got.subset).value !=
               got.value)
        why = "reported subset does not reproduce the value";
    } catch (const Error& err) {
      why = err.what();
    }
    s.check(why.empty(), [&] {
      return "branch trial " + std::to_string(t) + ": " + why + "\n" +
             dump_gvc(inst, ProblemKind::GVC2);
    });
  }
  return s.result;
}

SuiteResult verify_transfer(int trials, std::uint64_t seed) {
  Suite s("transfer");
  for (int t = 0; t < trials; ++t) {
    GvcInstance inst;
    TransferReport report;
    bool drawn = false;
    std::string why;
    for (int attempt = 0; attempt < 200 && !drawn; ++attempt) {
      Rng rng(mix(seed, static_cast<std::uint64_t>(t) * 512 + attempt));
      const int n = 2 + static_cast<int>(rand_int(rng, 0, 10));  // 2..12
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rand_unit(rng) < 0.5) edges.push_back({i, j});
      const int m = static_cast<int>(edges.size());
      std::vector<double> q0(m, 0.0), q1(m), q2(m);
      for (int e = 0; e < m; ++e) {
        const long long u = rand_int(rng, 0, 4);
        q1[e] = static_cast<double>(u);
        q2[e] = static_cast<double>(rand_int(rng, 0, 2 * u));
      }
      // c large enough that the folded weights stay nonnegative
      std::vector<double> c(n, 0.0);
      for (int e = 0; e < m; ++e) {
        c[edges[e].u] += q1[e] - q2[e];
        c[edges[e].v] += q1[e] - q2[e];
      }
      for (int v = 0; v < n; ++v)
        c[v] = std::max(c[v], 0.0) + static_cast<double>(rand_int(rng, 0, 5));
      inst = make_instance(n, std::move(edges), std::move(c), std::move(q0),
                           std::move(q1), std::move(q2));
      try {
        report = vcpnew_epsilon_transfer(inst);
      } catch (const Error& err) {
        why = err.what();
        break;
      }
      drawn = report.deltaDefined;
    }
    if (why.empty()) {
      if (!drawn)
        why = "could not draw an instance with a positive folded optimum";
      else if (!report.withinBound)
        why = "ratio " + num(report.ratio) + " exceeds (2+d)/(1+d) bound " +
              num(report.bound) + " at delta " + num(report.delta);
    }
    s.check(why.empty(), [&] {
      return "transfer trial " + std::to_string(t) + ": " + why + "\n" +
             dump_gvc(inst, ProblemKind::VCPNEW);
    });
  }
  return s.result;
}

SuiteResult verify_ugvc2(int trials, std::uint64_t seed) {
  Suite s("ugvc2");
  const double deltas[] = {1.0, -1.0, 2.0, -2.0, 3.0, -3.0};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t salt = mix(seed, t);
    const double delta = deltas[t % 6];
    const int n = 1 + static_cast<int>(salt % 10);  // 1..10
    GeneratorConfig cfg;
    cfg.family = Family::Uniform;
    cfg.n = n;
    cfg.density = 0.45;
    cfg.gamma = -delta;
    cfg.delta = delta;
    cfg.seed = salt;
    const GvcInstance inst = generate(cfg).inst;
    const UgvcReport report = ugvc2_structure(inst, -delta, delta);
    std::string why;
    if (delta > 0.0) {
      if (!report.optimumMatchesPredicted)
        why = "optimum " + num(report.optimum) +
              " != -delta * independence number " + num(report.predicted);
      else if (!report.independentOptimumExists)
        why = "no optimal subset is an independent set";
    } else if (!report.coverOptimumExists) {
      why = "no optimal subset is a vertex cover (optimum " +
            num(report.optimum) + ")";
    }
    s.check(why.empty(), [&] {
      return "ugvc2 trial " + std::to_string(t) + " (delta " + num(delta) +
             "): " + why + "\n" + dump_gvc(inst, ProblemKind::GVC2);
    });
  }
  return s.result;
}

SuiteResult verify_cuts(int trials, std::uint64_t seed) {
  Suite s("cuts");
  for (int t = 0; t < trials; ++t) {
    GvcInstance inst;
    CutPool pool;
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      const std::uint64_t salt =
          mix(seed, static_cast<std::uint64_t>(t) * 128 + attempt);
      const int n = 4 + static_cast<int>(salt % 7);  // 4..10
      inst = gen(Family::Gvc2, n, 0.7, -5, 5, salt).inst;
      pool = clique_cuts(inst, 4);
      found = !pool.cliques.empty();
    }
    if (!found) {
      s.fail("cuts trial " + std::to_string(t) +
             ": no clique-bearing draw found");
      continue;
    }
    std::string why;
    const LpModel model = build(inst, ProblemKind::GVC2);
    const LpSolution plain = solve_lp(model);
    const LpSolution cut = solve_lp_with_cuts(inst, model, pool);
    const double ip = brute_force(inst, ProblemKind::GVC2).value;
    if (plain.status != LpSolution::Status::Optimal ||
        cut.status != LpSolution::Status::Optimal)
      why = "relaxation did not report an optimum";
    else if (plain.reported > cut.reported + kTol)
      why = "cuts weakened the bound: " + num(plain.reported) + " > " +
            num(cut.reported);
    else if (cut.reported > ip + kTol * (1.0 + std::abs(ip)))
      why = "cut bound " + num(cut.reported) + " exceeds integer optimum " +
            num(ip);
    // no integral feasible point may violate any cut
    for (std::uint32_t mask = 0; why.empty() && mask < (1u << inst.n);
         ++mask) {
      for (const std::vector<int>& clique : pool.cliques) {
        int members = 0;
        for (int v : clique) members += (mask >> v) & 1u;
        const int inside = members * (members - 1) / 2;
        if (members - inside > 1) {
          why = "cut on {";
          for (std::size_t i = 0; i < clique.size(); ++i)
            why += (i ? "," : "") + std::to_string(clique[i] + 1);
          why += "} cuts off subset mask " + std::to_string(mask);
          break;
        }
      }
    }
    s.check(why.empty(), [&] {
      return "cuts trial " + std::to_string(t) + ": " + why + "\n" +
             dump_gvc(inst, ProblemKind::GVC2);
    });
  }
  return s.result;
}

SuiteResult verify_lp_equivalence(int trials, std::uint64_t seed) {
  Suite s("lpequiv");
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t salt = mix(seed, t);
    const int n = 2 + static_cast<int>(salt % 7);  // 2..8
    const GvcInstance inst = gen(Family::General, n, 0.5, -5, 5, salt).inst;
    const LpEquivalence eq = lp_equivalence_check(inst);
    s.check(eq.maxGap <= kTol, [&] {
      return "lpequiv trial " + std::to_string(t) + ": values " +
             num(eq.fullValue) + " / " + num(eq.zeroFormValue) + " / " +
             num(eq.twoFormValue) + " spread " + num(eq.maxGap) + "\n" +
             dump_gvc(inst, ProblemKind::GVC);
    });
  }
  return s.result;
}

const std::vector<SuiteEntry>& verify_suites() {
  static const std::vector<SuiteEntry> suites = {
      {"reductions", verify_reductions},
      {"halfint", verify_halfint},
      {"rounding", verify_rounding},
      {"flow", verify_flow},
      {"branch", verify_branch},
      {"transfer", verify_transfer},
      {"ugvc2", verify_ugvc2},
      {"cuts", verify_cuts},
      {"lpequiv", verify_lp_equivalence},
  };
  return suites;
}

std::string format_suite(const SuiteResult& result) {
  std::ostringstream out;
  out << "suite " << result.suite << ": "
      << (result.pass() ? "pass" : "FAIL") << " (" << result.checks
      << " checks, " << result.failures << " failures)";
  if (result.checks == 0)
    out << "\nwarning: zero trials requested; the pass is vacuous";
  for (const std::string& note : result.notes) out << "\n--- " << note;
  return out.str();
}

}  // namespace gvc
