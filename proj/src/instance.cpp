#include "gvc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

namespace gvc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const KindInfo kKindTable[] = {
    // usesQ0 usesQ1 usesQ2  feasible                    max    req0   req1   req2
    {true, true, true, Feasible::AnySubset, false, false, false, false},   // GVC
    {true, false, false, Feasible::AnySubset, false, false, true, true},   // GVC1
    {false, false, true, Feasible::AnySubset, false, true, true, false},   // GVC2
    {false, true, true, Feasible::VertexCover, false, false, false, false},  // VCPNEW
    {false, false, true, Feasible::VertexCover, false, false, true, false},  // VCOP
    {false, true, false, Feasible::VertexCover, false, false, false, true},  // VCUP
    {true, true, false, Feasible::IndependentSet, true, false, false, false},  // ISPNEW
    {true, false, false, Feasible::IndependentSet, true, false, true, false},  // ISOP
    {false, true, false, Feasible::IndependentSet, true, true, false, false},  // ISUP
    {false, false, false, Feasible::VertexCover, false, true, true, true},   // MWVCP
    {false, false, false, Feasible::IndependentSet, true, true, true, true},  // MWISP
};

const char* kKindNames[] = {"gvc",    "gvc1", "gvc2", "vcpnew", "vcop", "vcup",
                            "ispnew", "isop", "isup", "mwvcp",  "mwisp"};

void check_weight(double w, const char* what) {
  if (std::isnan(w) || w == -kInf)
    throw PreconditionError(std::string(what) + " weight must be finite or inf");
}

}  // namespace

const KindInfo& kind_info(ProblemKind kind) {
  return kKindTable[static_cast<int>(kind)];
}

const char* kind_name(ProblemKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

std::optional<ProblemKind> kind_from_name(const std::string& name) {
  for (int k = 0; k < 11; ++k)
    if (name == kKindNames[k]) return static_cast<ProblemKind>(k);
  return std::nullopt;
}

GvcInstance make_instance(int n, std::vector<Edge> edges, std::vector<double> c,
                          std::vector<double> q0, std::vector<double> q1,
                          std::vector<double> q2) {
  if (n < 0) throw PreconditionError("vertex count must be nonnegative");
  const std::size_t m = edges.size();
  if (c.size() != static_cast<std::size_t>(n) || q0.size() != m ||
      q1.size() != m || q2.size() != m)
    throw PreconditionError("weight vector sizes do not match instance shape");
  for (double w : c) check_weight(w, "vertex");
  for (std::size_t e = 0; e < m; ++e) {
    check_weight(q0[e], "edge");
    check_weight(q1[e], "edge");
    check_weight(q2[e], "edge");
    auto& [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (u == v)
      throw PreconditionError("loop edge at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(edges[x].u, edges[x].v) < std::pair(edges[y].u, edges[y].v);
  });
  GvcInstance inst;
  inst.n = n;
  inst.c = std::move(c);
  inst.edges.reserve(m);
  inst.q0.reserve(m);
  inst.q1.reserve(m);
  inst.q2.reserve(m);
  for (int idx : order) {
    if (!inst.edges.empty() && inst.edges.back() == edges[idx])
      throw PreconditionError("duplicate edge {" +
                              std::to_string(edges[idx].u + 1) + "," +
                              std::to_string(edges[idx].v + 1) + "}");
    inst.edges.push_back(edges[idx]);
    inst.q0.push_back(q0[idx]);
    inst.q1.push_back(q1[idx]);
    inst.q2.push_back(q2[idx]);
  }
  return inst;
}

void validate_kind(const GvcInstance& inst, ProblemKind kind) {
  const KindInfo& info = kind_info(kind);
  for (int e = 0; e < inst.m(); ++e) {
    const bool bad = (info.reqZeroQ0 && inst.q0[e] != 0.0) ||
                     (info.reqZeroQ1 && inst.q1[e] != 0.0) ||
                     (info.reqZeroQ2 && inst.q2[e] != 0.0);
    if (bad)
      throw PreconditionError(
          std::string("kind ") + kind_name(kind) + " forces a zero q-field, "
          "violated on edge {" + std::to_string(inst.edges[e].u + 1) + "," +
          std::to_string(inst.edges[e].v + 1) + "}");
  }
}

std::vector<std::vector<IncidentEdge>> adjacency(const GvcInstance& inst) {
  std::vector<std::vector<IncidentEdge>> adj(inst.n);
  for (int e = 0; e < inst.m(); ++e) {
    adj[inst.edges[e].u].push_back({inst.edges[e].v, e});
    adj[inst.edges[e].v].push_back({inst.edges[e].u, e});
  }
  return adj;
}

namespace {

std::vector<char> member_flags(int n, const std::vector<int>& members,
                               const char* what) {
  std::vector<char> in(n, 0);
  for (int v : members) {
    if (v < 0 || v >= n)
      throw PreconditionError(std::string(what) + ": vertex index out of range");
    if (in[v])
      throw PreconditionError(std::string(what) + ": duplicate vertex " +
                              std::to_string(v + 1));
    in[v] = 1;
  }
  return in;
}

}  // namespace

std::array<std::vector<int>, 3> edge_partition(const GvcInstance& inst,
                                               const std::vector<int>& members) {
  std::vector<char> in = member_flags(inst.n, members, "edge_partition");
  std::array<std::vector<int>, 3> part;
  for (int e = 0; e < inst.m(); ++e)
    part[in[inst.edges[e].u] + in[inst.edges[e].v]].push_back(e);
  return part;
}

SubsetSolution evaluate(const GvcInstance& inst, ProblemKind kind,
                        const std::vector<int>& members) {
  const KindInfo& info = kind_info(kind);
  std::vector<char> in = member_flags(inst.n, members, "evaluate");

  SubsetSolution sol;
  sol.members = members;
  std::sort(sol.members.begin(), sol.members.end());
  for (int v : sol.members) sol.value += inst.c[v];

  for (int e = 0; e < inst.m(); ++e) {
    const int ends = in[inst.edges[e].u] + in[inst.edges[e].v];
    ++sol.partitionCounts[ends];
    if (ends == 0 && info.feasible == Feasible::VertexCover)
      throw FeasibilityError("edge {" + std::to_string(inst.edges[e].u + 1) +
                             "," + std::to_string(inst.edges[e].v + 1) +
                             "} is uncovered");
    if (ends == 2 && info.feasible == Feasible::IndependentSet)
      throw FeasibilityError("edge {" + std::to_string(inst.edges[e].u + 1) +
                             "," + std::to_string(inst.edges[e].v + 1) +
                             "} has both endpoints selected");
    if (ends == 0 && info.usesQ0) sol.value += inst.q0[e];
    if (ends == 1 && info.usesQ1) sol.value += inst.q1[e];
    if (ends == 2 && info.usesQ2) sol.value += inst.q2[e];
  }
  return sol;
}

UbqpInstance make_ubqp(int n, std::vector<double> a, std::vector<Edge> pairs,
                       std::vector<double> q) {
  if (n < 0) throw PreconditionError("variable count must be nonnegative");
  if (a.size() != static_cast<std::size_t>(n) || q.size() != pairs.size())
    throw PreconditionError("ubqp vector sizes do not match instance shape");
  for (double w : a) check_weight(w, "linear");
  for (double w : q) check_weight(w, "quadratic");
  for (auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw PreconditionError("ubqp pair index out of range");
    if (u > v) std::swap(u, v);
  }
  std::vector<int> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(pairs[x].u, pairs[x].v) < std::pair(pairs[y].u, pairs[y].v);
  });
  UbqpInstance inst;
  inst.n = n;
  inst.a = std::move(a);
  for (int idx : order) {
    if (!inst.pairs.empty() && inst.pairs.back() == pairs[idx])
      throw PreconditionError("duplicate ubqp pair");
    inst.pairs.push_back(pairs[idx]);
    inst.q.push_back(q[idx]);
  }
  return inst;
}

double evaluate_ubqp(const UbqpInstance& inst, const std::vector<int>& members) {
  std::vector<char> in = member_flags(inst.n, members, "evaluate_ubqp");
  double value = 0.0;
  for (int v : members) value += inst.a[v];
  for (std::size_t p = 0; p < inst.pairs.size(); ++p)
    if (in[inst.pairs[p].u] && in[inst.pairs[p].v]) value += 2.0 * inst.q[p];
  return value;
}

std::vector<Edge> support_graph(const UbqpInstance& inst) {
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < inst.pairs.size(); ++p)
    if (inst.q[p] != 0.0) edges.push_back(inst.pairs[p]);
  return edges;
}

Bqp01Instance make_bqp01(int m, int n, std::vector<double> a,
                         std::vector<double> b,
                         std::vector<std::vector<double>> q) {
  if (m < 0 || n < 0) throw PreconditionError("bqp01 shape must be nonnegative");
  if (a.size() != static_cast<std::size_t>(m) ||
      b.size() != static_cast<std::size_t>(n) ||
      q.size() != static_cast<std::size_t>(m))
    throw PreconditionError("bqp01 vector sizes do not match instance shape");
  for (auto& row : q)
    if (row.size() != static_cast<std::size_t>(n))
      throw PreconditionError("bqp01 quadratic row has wrong length");
  for (double w : a) check_weight(w, "linear");
  for (double w : b) check_weight(w, "linear");
  for (auto& row : q)
    for (double w : row) check_weight(w, "quadratic");
  return Bqp01Instance{m, n, std::move(a), std::move(b), std::move(q)};
}

double evaluate_bqp01(const Bqp01Instance& inst, const std::vector<int>& left,
                      const std::vector<int>& right) {
  std::vector<char> inL = member_flags(inst.m, left, "evaluate_bqp01 left");
  std::vector<char> inR = member_flags(inst.n, right, "evaluate_bqp01 right");
  double value = 0.0;
  for (int i : left) value += inst.a[i];
  for (int j : right) value += inst.b[j];
  for (int i : left)
    for (int j : right) value += inst.q[i][j];
  (void)inL;
  (void)inR;
  return value;
}

void validate_partition(const GvcInstance& inst, const BipartitePartition& p) {
  std::vector<int> side(inst.n, -1);
  for (int v : p.left) {
    if (v < 0 || v >= inst.n || side[v] != -1)
      throw PreconditionError("partition: bad or repeated vertex on left side");
    side[v] = 0;
  }
  for (int v : p.right) {
    if (v < 0 || v >= inst.n || side[v] != -1)
      throw PreconditionError("partition: bad or repeated vertex on right side");
    side[v] = 1;
  }
  for (int v = 0; v < inst.n; ++v)
    if (side[v] == -1)
      throw PreconditionError("partition: vertex " + std::to_string(v + 1) +
                              " is on neither side");
  for (const Edge& e : inst.edges)
    if (side[e.u] == side[e.v])
      throw PreconditionError("partition: edge {" + std::to_string(e.u + 1) +
                              "," + std::to_string(e.v + 1) +
                              "} does not cross the partition");
}

std::optional<BipartitePartition> two_color(const GvcInstance& inst) {
  std::vector<std::vector<IncidentEdge>> adj = adjacency(inst);
  std::vector<int> color(inst.n, -1);
  for (int s = 0; s < inst.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (const IncidentEdge& ie : adj[v]) {
        if (color[ie.to] == -1) {
          color[ie.to] = 1 - color[v];
          bfs.push(ie.to);
        } else if (color[ie.to] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  BipartitePartition part;
  for (int v = 0; v < inst.n; ++v)
    (color[v] == 0 ? part.left : part.right).push_back(v);
  return part;
}

GvcInstance delete_vertex(const GvcInstance& inst, int v) {
  if (v < 0 || v >= inst.n)
    throw PreconditionError("delete_vertex: index out of range");
  GvcInstance out;
  out.n = inst.n - 1;
  for (int i = 0; i < inst.n; ++i)
    if (i != v) out.c.push_back(inst.c[i]);
  auto shift = [v](int i) { return i > v ? i - 1 : i; };
  for (int e = 0; e < inst.m(); ++e) {
    if (inst.edges[e].u == v || inst.edges[e].v == v) continue;
    out.edges.push_back({shift(inst.edges[e].u), shift(inst.edges[e].v)});
    out.q0.push_back(inst.q0[e]);
    out.q1.push_back(inst.q1[e]);
    out.q2.push_back(inst.q2[e]);
  }
  return out;
}

double big_m(const GvcInstance& inst) {
  double m = 1.0;
  for (double w : inst.c) m += std::abs(w);
  for (int e = 0; e < inst.m(); ++e) {
    if (std::isfinite(inst.q0[e])) m += std::abs(inst.q0[e]);
    if (std::isfinite(inst.q1[e])) m += std::abs(inst.q1[e]);
    if (std::isfinite(inst.q2[e])) m += std::abs(inst.q2[e]);
  }
  return m;
}

bool all_finite(const GvcInstance& inst) {
  for (double w : inst.c)
    if (!std::isfinite(w)) return false;
  for (int e = 0; e < inst.m(); ++e)
    if (!std::isfinite(inst.q0[e]) || !std::isfinite(inst.q1[e]) ||
        !std::isfinite(inst.q2[e]))
      return false;
  return true;
}

}  // namespace gvc
