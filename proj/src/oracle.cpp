#include "gvc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace gvc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Running sum that keeps +inf contributions countable so they can be
// removed again during the Gray-code walk.
struct InfSum {
  double finite = 0.0;
  int infs = 0;
  void add(double w) {
    if (w == kInf)
      ++infs;
    else
      finite += w;
  }
  void sub(double w) {
    if (w == kInf)
      --infs;
    else
      finite -= w;
  }
  double value() const { return infs > 0 ? kInf : finite; }
};

std::vector<int> mask_to_members(std::uint32_t mask) {
  std::vector<int> members;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) members.push_back(v);
  return members;
}

struct FlatAdjacency {
  std::vector<int> start;  // size n+1
  std::vector<int> to;
  std::vector<int> edge;
};

FlatAdjacency flat_adjacency(int n, const std::vector<Edge>& edges) {
  FlatAdjacency adj;
  adj.start.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++adj.start[e.u + 1];
    ++adj.start[e.v + 1];
  }
  for (int v = 0; v < n; ++v) adj.start[v + 1] += adj.start[v];
  adj.to.resize(2 * edges.size());
  adj.edge.resize(2 * edges.size());
  std::vector<int> fill(adj.start.begin(), adj.start.end() - 1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj.to[fill[edges[e].u]] = edges[e].v;
    adj.edge[fill[edges[e].u]++] = e;
    adj.to[fill[edges[e].v]] = edges[e].u;
    adj.edge[fill[edges[e].v]++] = e;
  }
  return adj;
}

}  // namespace

OracleResult brute_force(const GvcInstance& inst, ProblemKind kind) {
  if (inst.n > kOracleMaxN)
    throw CapacityError("brute_force handles at most " +
                        std::to_string(kOracleMaxN) + " vertices");
  validate_kind(inst, kind);
  const KindInfo& info = kind_info(kind);
  const int m = inst.m();
  const FlatAdjacency adj = flat_adjacency(inst.n, inst.edges);

  // Objective weight of an edge by endpoint count, zero for unused fields.
  std::vector<double> w0(m), w1(m), w2(m);
  for (int e = 0; e < m; ++e) {
    w0[e] = info.usesQ0 ? inst.q0[e] : 0.0;
    w1[e] = info.usesQ1 ? inst.q1[e] : 0.0;
    w2[e] = info.usesQ2 ? inst.q2[e] : 0.0;
  }

  InfSum value;
  for (int e = 0; e < m; ++e) value.add(w0[e]);
  int uncovered = m;  // edges with no endpoint selected
  int doubled = 0;    // edges with both endpoints selected

  const bool maximize = info.maximize;
  auto feasible = [&]() {
    switch (info.feasible) {
      case Feasible::VertexCover:
        return uncovered == 0;
      case Feasible::IndependentSet:
        return doubled == 0;
      default:
        return true;
    }
  };
  auto better = [&](double cand, double best) {
    return maximize ? cand > best : cand < best;
  };

  double bestValue = maximize ? -kInf : kInf;
  std::uint32_t bestMask = 0;
  std::uint64_t count = 0;
  bool any = false;
  auto consider = [&](std::uint32_t mask) {
    if (!feasible()) return;
    const double cand = value.value();
    if (!any || better(cand, bestValue)) {
      any = true;
      bestValue = cand;
      bestMask = mask;
      count = 1;
    } else if (cand == bestValue) {
      ++count;
      if (mask < bestMask) bestMask = mask;
    }
  };

  std::uint32_t mask = 0;
  consider(mask);
  const std::uint64_t total = 1ull << inst.n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int v = std::countr_zero(k);
    const std::uint32_t bit = 1u << v;
    const bool entering = (mask & bit) == 0;
    mask ^= bit;
    if (entering)
      value.add(inst.c[v]);
    else
      value.sub(inst.c[v]);
    for (int idx = adj.start[v]; idx < adj.start[v + 1]; ++idx) {
      const int u = adj.to[idx];
      const int e = adj.edge[idx];
      const bool uIn = (mask >> u) & 1u;
      if (entering) {
        if (uIn) {
          value.sub(w1[e]);
          value.add(w2[e]);
          ++doubled;
        } else {
          value.sub(w0[e]);
          value.add(w1[e]);
          --uncovered;
        }
      } else {
        if (uIn) {
          value.sub(w2[e]);
          value.add(w1[e]);
          --doubled;
        } else {
          value.sub(w1[e]);
          value.add(w0[e]);
          ++uncovered;
        }
      }
    }
    consider(mask);
  }

  OracleResult result;
  result.subset = mask_to_members(bestMask);
  result.value = evaluate(inst, kind, result.subset).value;
  result.optimaCount = count;
  return result;
}

OracleResult brute_force_ubqp(const UbqpInstance& inst) {
  if (inst.n > kOracleMaxN)
    throw CapacityError("brute_force_ubqp handles at most " +
                        std::to_string(kOracleMaxN) + " variables");
  const FlatAdjacency adj = flat_adjacency(inst.n, inst.pairs);

  double value = 0.0;
  double bestValue = 0.0;
  std::uint32_t bestMask = 0;
  std::uint64_t count = 1;
  std::uint32_t mask = 0;
  const std::uint64_t total = 1ull << inst.n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int v = std::countr_zero(k);
    const std::uint32_t bit = 1u << v;
    const bool entering = (mask & bit) == 0;
    const std::uint32_t others = mask & ~bit;
    double delta = inst.a[v];
    for (int idx = adj.start[v]; idx < adj.start[v + 1]; ++idx)
      if ((others >> adj.to[idx]) & 1u) delta += 2.0 * inst.q[adj.edge[idx]];
    mask ^= bit;
    value += entering ? delta : -delta;
    if (value < bestValue) {
      bestValue = value;
      bestMask = mask;
      count = 1;
    } else if (value == bestValue) {
      ++count;
      if (mask < bestMask) bestMask = mask;
    }
  }

  OracleResult result;
  result.subset = mask_to_members(bestMask);
  result.value = evaluate_ubqp(inst, result.subset);
  result.optimaCount = count;
  return result;
}

Bqp01Result brute_force_bqp01_small_side(const Bqp01Instance& inst) {
  // Enumerate the smaller side; greedily complete the other one.
  const bool transposed = inst.m > inst.n;
  const int rows = transposed ? inst.n : inst.m;
  const int cols = transposed ? inst.m : inst.n;
  if (rows > kOracleMaxN)
    throw CapacityError("brute_force_bqp01_small_side: both sides exceed " +
                        std::to_string(kOracleMaxN));
  auto aw = [&](int i) { return transposed ? inst.b[i] : inst.a[i]; };
  auto bw = [&](int j) { return transposed ? inst.a[j] : inst.b[j]; };
  auto qw = [&](int i, int j) { return transposed ? inst.q[j][i] : inst.q[i][j]; };

  std::vector<double> reduced(cols);  // cost of picking column j given the mask
  for (int j = 0; j < cols; ++j) reduced[j] = bw(j);
  auto scan = [&](double& negSum, int& zeros) {
    negSum = 0.0;
    zeros = 0;
    for (int j = 0; j < cols; ++j) {
      if (reduced[j] < 0.0) negSum += reduced[j];
      if (reduced[j] == 0.0) ++zeros;
    }
  };

  double aSum = 0.0;
  double negSum;
  int zeros;
  scan(negSum, zeros);
  double bestValue = aSum + negSum;
  std::uint32_t bestMask = 0;
  std::uint64_t count = 1ull << zeros;

  std::uint32_t mask = 0;
  const std::uint64_t total = 1ull << rows;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int i = std::countr_zero(k);
    const std::uint32_t bit = 1u << i;
    const bool entering = (mask & bit) == 0;
    mask ^= bit;
    const double sign = entering ? 1.0 : -1.0;
    aSum += sign * aw(i);
    for (int j = 0; j < cols; ++j) reduced[j] += sign * qw(i, j);
    scan(negSum, zeros);
    const double value = aSum + negSum;
    if (value < bestValue) {
      bestValue = value;
      bestMask = mask;
      count = 1ull << zeros;
    } else if (value == bestValue) {
      count += 1ull << zeros;
      if (mask < bestMask) bestMask = mask;
    }
  }

  // Rebuild the winning pair from scratch.
  for (int j = 0; j < cols; ++j) reduced[j] = bw(j);
  std::vector<int> rowPick = mask_to_members(bestMask);
  for (int i : rowPick)
    for (int j = 0; j < cols; ++j) reduced[j] += qw(i, j);
  std::vector<int> colPick;
  for (int j = 0; j < cols; ++j)
    if (reduced[j] < 0.0) colPick.push_back(j);

  Bqp01Result result;
  result.left = transposed ? colPick : rowPick;
  result.right = transposed ? rowPick : colPick;
  result.value = evaluate_bqp01(inst, result.left, result.right);
  result.optimaCount = count;
  return result;
}

namespace {

const char* kFamilyNames[] = {
    "general", "gvc1",          "gvc2", "vcpnew-feasible",
    "ispnew-feasible", "bipartite", "hl-monotone", "ratio-bounded",
    "band",    "nonpositive-lifted", "uniform"};

using Rng = std::mt19937_64;

long long rand_int(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double rand_unit(Rng& rng) { return (rng() >> 11) * 0x1.0p-53; }

std::vector<Edge> random_graph(Rng& rng, int n, double density) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rand_unit(rng) < density) edges.push_back({i, j});
  return edges;
}

void check_family(const GeneratedInstance& g, const GeneratorConfig& cfg) {
  const GvcInstance& inst = g.inst;
  auto fail = [&](const std::string& why) {
    throw ConfigError("generated instance violates family constraint: " + why);
  };
  switch (cfg.family) {
    case Family::Gvc1:
      for (int e = 0; e < inst.m(); ++e)
        if (inst.q1[e] != 0 || inst.q2[e] != 0) fail("gvc1 needs q1=q2=0");
      break;
    case Family::Gvc2:
    case Family::Uniform:
      for (int e = 0; e < inst.m(); ++e)
        if (inst.q0[e] != 0 || inst.q1[e] != 0) fail("gvc2 needs q0=q1=0");
      break;
    case Family::VcpnewFeasible:
      for (int e = 0; e < inst.m(); ++e)
        if (inst.q0[e] != 0) fail("vcpnew-feasible needs q0=0");
      break;
    case Family::IspnewFeasible:
      for (int e = 0; e < inst.m(); ++e)
        if (inst.q2[e] != 0) fail("ispnew-feasible needs q2=0");
      break;
    case Family::Bipartite:
      validate_partition(inst, *g.partition);
      break;
    case Family::HlMonotone:
      for (int e = 0; e < inst.m(); ++e)
        if (!(inst.q0[e] >= inst.q1[e] && inst.q1[e] >= inst.q2[e] &&
              inst.q2[e] >= 0))
          fail("hl-monotone needs q0 >= q1 >= q2 >= 0");
      break;
    case Family::RatioBounded:
      for (int e = 0; e < inst.m(); ++e)
        if (!(inst.q0[e] >= 0 && inst.q1[e] >= 0 && inst.q2[e] >= 0 &&
              inst.q2[e] <= cfg.alpha * inst.q1[e] &&
              inst.q1[e] <= cfg.beta * inst.q0[e]))
          fail("ratio-bounded chain violated");
      for (double w : inst.c)
        if (w < 0) fail("ratio-bounded needs c >= 0");
      break;
    case Family::Band:
      for (int e = 0; e < inst.m(); ++e) {
        for (double w : {inst.q0[e], inst.q1[e], inst.q2[e]})
          if (!(w >= cfg.bandK && w <= cfg.alpha * cfg.bandK))
            fail("band range violated");
      }
      for (double w : inst.c)
        if (w < 0) fail("band needs c >= 0");
      break;
    case Family::NonpositiveLifted:
      for (int e = 0; e < inst.m(); ++e)
        if (inst.q2[e] - 2 * inst.q1[e] + inst.q0[e] > 0)
          fail("lifted weight positive");
      break;
    default:
      break;
  }
}

}  // namespace

const char* family_name(Family family) {
  return kFamilyNames[static_cast<int>(family)];
}

std::optional<Family> family_from_name(const std::string& name) {
  for (int f = 0; f < 11; ++f)
    if (name == kFamilyNames[f]) return static_cast<Family>(f);
  return std::nullopt;
}

GeneratedInstance generate(const GeneratorConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("generator needs n >= 1");
  if (!(cfg.density >= 0.0 && cfg.density <= 1.0))
    throw ConfigError("density must lie in [0,1]");
  if (cfg.weightLo > cfg.weightHi) throw ConfigError("weight range is empty");
  Rng rng(cfg.seed);

  const long long lo = cfg.weightLo;
  const long long hi = cfg.weightHi;
  const long long nnLo = std::max<long long>(lo, 0);
  const long long nnHi = std::max<long long>(hi, 0);

  GeneratedInstance out;
  out.kind = ProblemKind::GVC;

  std::vector<Edge> edges;
  std::optional<BipartitePartition> part;
  if (cfg.family == Family::Bipartite) {
    std::vector<int> side(cfg.n);
    for (int v = 0; v < cfg.n; ++v) side[v] = static_cast<int>(rand_int(rng, 0, 1));
    for (int i = 0; i < cfg.n; ++i)
      for (int j = i + 1; j < cfg.n; ++j)
        if (side[i] != side[j] && rand_unit(rng) < cfg.density)
          edges.push_back({i, j});
    part.emplace();
    for (int v = 0; v < cfg.n; ++v)
      (side[v] == 0 ? part->left : part->right).push_back(v);
  } else {
    edges = random_graph(rng, cfg.n, cfg.density);
  }
  const int m = static_cast<int>(edges.size());

  std::vector<double> c(cfg.n), q0(m, 0.0), q1(m, 0.0), q2(m, 0.0);
  auto fillC = [&](long long a, long long b) {
    for (int v = 0; v < cfg.n; ++v) c[v] = static_cast<double>(rand_int(rng, a, b));
  };

  switch (cfg.family) {
    case Family::General:
    case Family::Bipartite:
      fillC(lo, hi);
      for (int e = 0; e < m; ++e) {
        q0[e] = static_cast<double>(rand_int(rng, lo, hi));
        q1[e] = static_cast<double>(rand_int(rng, lo, hi));
        q2[e] = static_cast<double>(rand_int(rng, lo, hi));
      }
      break;
    case Family::Gvc1:
      fillC(lo, hi);
      for (int e = 0; e < m; ++e) q0[e] = static_cast<double>(rand_int(rng, lo, hi));
      out.kind = ProblemKind::GVC1;
      break;
    case Family::Gvc2:
      fillC(lo, hi);
      for (int e = 0; e < m; ++e) q2[e] = static_cast<double>(rand_int(rng, lo, hi));
      out.kind = ProblemKind::GVC2;
      break;
    case Family::VcpnewFeasible:
      fillC(lo, hi);
      for (int e = 0; e < m; ++e) {
        q1[e] = static_cast<double>(rand_int(rng, lo, hi));
        q2[e] = static_cast<double>(rand_int(rng, lo, hi));
      }
      out.kind = ProblemKind::VCPNEW;
      break;
    case Family::IspnewFeasible:
      fillC(lo, hi);
      for (int e = 0; e < m; ++e) {
        q0[e] = static_cast<double>(rand_int(rng, lo, hi));
        q1[e] = static_cast<double>(rand_int(rng, lo, hi));
      }
      out.kind = ProblemKind::ISPNEW;
      break;
    case Family::HlMonotone: {
      if (hi < 0) throw ConfigError("hl-monotone needs a nonnegative weight range");
      fillC(nnLo, hi);
      for (int e = 0; e < m; ++e) {
        long long w[3];
        for (long long& x : w) x = rand_int(rng, nnLo, hi);
        std::sort(w, w + 3, std::greater<>());
        q0[e] = static_cast<double>(w[0]);
        q1[e] = static_cast<double>(w[1]);
        q2[e] = static_cast<double>(w[2]);
      }
      break;
    }
    case Family::RatioBounded: {
      if (cfg.alpha < 1.0 || cfg.beta < 1.0)
        throw ConfigError("ratio-bounded needs alpha, beta >= 1");
      if (hi < 0) throw ConfigError("ratio-bounded needs a nonnegative weight range");
      fillC(nnLo, hi);
      for (int e = 0; e < m; ++e) {
        const long long a = rand_int(rng, nnLo, hi);
        const long long b = rand_int(rng, 0, static_cast<long long>(cfg.beta * a));
        const long long d = rand_int(rng, 0, static_cast<long long>(cfg.alpha * b));
        q0[e] = static_cast<double>(a);
        q1[e] = static_cast<double>(b);
        q2[e] = static_cast<double>(d);
      }
      break;
    }
    case Family::Band: {
      const long long lowK = cfg.bandK;
      const long long highK = static_cast<long long>(cfg.alpha * cfg.bandK);
      if (lowK < 0 || highK < lowK)
        throw ConfigError("band needs 0 <= K <= floor(alpha*K)");
      fillC(nnLo, nnHi);
      for (int e = 0; e < m; ++e) {
        q0[e] = static_cast<double>(rand_int(rng, lowK, highK));
        q1[e] = static_cast<double>(rand_int(rng, lowK, highK));
        q2[e] = static_cast<double>(rand_int(rng, lowK, highK));
      }
      break;
    }
    case Family::NonpositiveLifted:
      fillC(lo, hi);
      for (int e = 0; e < m; ++e) {
        const long long a = rand_int(rng, lo, hi);
        const long long d = rand_int(rng, lo, hi);
        const long long mid = (a + d + 1) / 2 + rand_int(rng, 0, 3);
        q0[e] = static_cast<double>(a);
        q2[e] = static_cast<double>(d);
        q1[e] = static_cast<double>(mid);
      }
      break;
    case Family::Uniform:
      for (int v = 0; v < cfg.n; ++v) c[v] = cfg.gamma;
      for (int e = 0; e < m; ++e) q2[e] = cfg.delta;
      out.kind = ProblemKind::GVC2;
      break;
  }

  out.inst = make_instance(cfg.n, std::move(edges), std::move(c), std::move(q0),
                           std::move(q1), std::move(q2));
  out.partition = std::move(part);
  check_family(out, cfg);
  return out;
}

UbqpInstance random_ubqp(int n, double density, int lo, int hi,
                         std::uint64_t seed) {
  if (n < 1) throw ConfigError("random_ubqp needs n >= 1");
  if (lo > hi) throw ConfigError("weight range is empty");
  Rng rng(seed);
  std::vector<Edge> pairs = random_graph(rng, n, density);
  std::vector<double> a(n), q(pairs.size());
  for (double& w : a) w = static_cast<double>(rand_int(rng, lo, hi));
  for (double& w : q) w = static_cast<double>(rand_int(rng, lo, hi));
  return make_ubqp(n, std::move(a), std::move(pairs), std::move(q));
}

Bqp01Instance random_bqp01(int m, int n, double density, int lo, int hi,
                           std::uint64_t seed) {
  if (m < 1 || n < 1) throw ConfigError("random_bqp01 needs m, n >= 1");
  if (lo > hi) throw ConfigError("weight range is empty");
  Rng rng(seed);
  std::vector<double> a(m), b(n);
  for (double& w : a) w = static_cast<double>(rand_int(rng, lo, hi));
  for (double& w : b) w = static_cast<double>(rand_int(rng, lo, hi));
  std::vector<std::vector<double>> q(m, std::vector<double>(n, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (rand_unit(rng) < density)
        q[i][j] = static_cast<double>(rand_int(rng, lo, hi));
  return make_bqp01(m, n, std::move(a), std::move(b), std::move(q));
}

}  // namespace gvc
