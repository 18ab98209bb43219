#include "gvc/reductions.hpp"

#include <algorithm>
#include <cmath>

namespace gvc {

namespace {

void require_finite(const std::vector<double>& w, const char* op,
                    const char* field) {
  for (double x : w)
    if (!std::isfinite(x))
      throw PreconditionError(std::string(op) + ": " + field +
                              " must be finite");
}

// Per-vertex sum of (hi[e] - lo[e]) over incident edges.
std::vector<double> incident_diff(const GvcInstance& inst,
                                  const std::vector<double>& hi,
                                  const std::vector<double>& lo) {
  std::vector<double> sum(inst.n, 0.0);
  for (int e = 0; e < inst.m(); ++e) {
    const double d = hi[e] - lo[e];
    sum[inst.edges[e].u] += d;
    sum[inst.edges[e].v] += d;
  }
  return sum;
}

double total(const std::vector<double>& w) {
  double s = 0.0;
  for (double x : w) s += x;
  return s;
}

}  // namespace

std::vector<int> GvcReduction::map_back(const std::vector<int>& subset) const {
  if (!complement) return subset;
  std::vector<char> in(target.n, 0);
  for (int v : subset) in[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < target.n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

std::vector<int> Bqp01Reduction::map_back(const std::vector<int>& left,
                                          const std::vector<int>& right) const {
  std::vector<int> out;
  for (int i : left) out.push_back(leftVertices[i]);
  for (int j : right) out.push_back(rightVertices[j]);
  std::sort(out.begin(), out.end());
  return out;
}

GvcReduction gvc_to_gvc1(const GvcInstance& inst) {
  require_finite(inst.c, "gvc_to_gvc1", "c");
  require_finite(inst.q0, "gvc_to_gvc1", "q0");
  require_finite(inst.q1, "gvc_to_gvc1", "q1");
  require_finite(inst.q2, "gvc_to_gvc1", "q2");
  GvcReduction red;
  red.targetKind = ProblemKind::GVC1;
  red.target = inst;
  const std::vector<double> shift = incident_diff(inst, inst.q2, inst.q1);
  for (int v = 0; v < inst.n; ++v) red.target.c[v] = inst.c[v] + shift[v];
  for (int e = 0; e < inst.m(); ++e) {
    red.target.q0[e] = inst.q2[e] - 2.0 * inst.q1[e] + inst.q0[e];
    red.target.q1[e] = 0.0;
    red.target.q2[e] = 0.0;
    red.offset += 2.0 * inst.q1[e] - inst.q2[e];
  }
  return red;
}

GvcReduction gvc_to_gvc2(const GvcInstance& inst) {
  require_finite(inst.c, "gvc_to_gvc2", "c");
  require_finite(inst.q0, "gvc_to_gvc2", "q0");
  require_finite(inst.q1, "gvc_to_gvc2", "q1");
  require_finite(inst.q2, "gvc_to_gvc2", "q2");
  GvcReduction red;
  red.targetKind = ProblemKind::GVC2;
  red.target = inst;
  const std::vector<double> shift = incident_diff(inst, inst.q1, inst.q0);
  for (int v = 0; v < inst.n; ++v) red.target.c[v] = inst.c[v] + shift[v];
  for (int e = 0; e < inst.m(); ++e) {
    red.target.q2[e] = inst.q2[e] - 2.0 * inst.q1[e] + inst.q0[e];
    red.target.q1[e] = 0.0;
    red.target.q0[e] = 0.0;
  }
  red.offset = total(inst.q0);
  return red;
}

UbqpReduction gvc_to_ubqp(const GvcInstance& inst) {
  require_finite(inst.c, "gvc_to_ubqp", "c");
  require_finite(inst.q0, "gvc_to_ubqp", "q0");
  require_finite(inst.q1, "gvc_to_ubqp", "q1");
  require_finite(inst.q2, "gvc_to_ubqp", "q2");
  UbqpReduction red;
  red.target.n = inst.n;
  const std::vector<double> shift = incident_diff(inst, inst.q1, inst.q0);
  for (int v = 0; v < inst.n; ++v)
    red.target.a.push_back(inst.c[v] + shift[v]);
  red.target.pairs = inst.edges;
  for (int e = 0; e < inst.m(); ++e)
    red.target.q.push_back((inst.q2[e] - 2.0 * inst.q1[e] + inst.q0[e]) / 2.0);
  red.offset = total(inst.q0);
  return red;
}

UbqpReduction gvc1_to_ubqp(const GvcInstance& inst) {
  validate_kind(inst, ProblemKind::GVC1);
  require_finite(inst.c, "gvc1_to_ubqp", "c");
  require_finite(inst.q0, "gvc1_to_ubqp", "q0");
  UbqpReduction red;
  red.target.n = inst.n;
  std::vector<double> deg(inst.n, 0.0);
  for (int e = 0; e < inst.m(); ++e) {
    deg[inst.edges[e].u] += inst.q0[e];
    deg[inst.edges[e].v] += inst.q0[e];
  }
  for (int v = 0; v < inst.n; ++v) red.target.a.push_back(inst.c[v] - deg[v]);
  red.target.pairs = inst.edges;
  for (int e = 0; e < inst.m(); ++e) red.target.q.push_back(inst.q0[e] / 2.0);
  red.offset = total(inst.q0);
  return red;
}

UbqpReduction gvc2_to_ubqp(const GvcInstance& inst) {
  validate_kind(inst, ProblemKind::GVC2);
  require_finite(inst.c, "gvc2_to_ubqp", "c");
  require_finite(inst.q2, "gvc2_to_ubqp", "q2");
  UbqpReduction red;
  red.target.n = inst.n;
  red.target.a = inst.c;
  red.target.pairs = inst.edges;
  for (int e = 0; e < inst.m(); ++e) red.target.q.push_back(inst.q2[e] / 2.0);
  red.offset = 0.0;
  return red;
}

GvcReduction ubqp_to_gvc2(const UbqpInstance& inst) {
  require_finite(inst.a, "ubqp_to_gvc2", "a");
  require_finite(inst.q, "ubqp_to_gvc2", "q");
  GvcReduction red;
  red.targetKind = ProblemKind::GVC2;
  std::vector<Edge> edges = support_graph(inst);
  std::vector<double> q2;
  for (std::size_t p = 0; p < inst.pairs.size(); ++p)
    if (inst.q[p] != 0.0) q2.push_back(2.0 * inst.q[p]);
  const std::size_t m = edges.size();
  red.target = make_instance(inst.n, std::move(edges), inst.a,
                             std::vector<double>(m, 0.0),
                             std::vector<double>(m, 0.0), std::move(q2));
  red.offset = 0.0;
  return red;
}

GvcReduction gvc1_complement_gvc2(const GvcInstance& inst,
                                  ProblemKind sourceKind) {
  if (sourceKind != ProblemKind::GVC1 && sourceKind != ProblemKind::GVC2)
    throw PreconditionError("gvc1_complement_gvc2: source must be gvc1 or gvc2");
  validate_kind(inst, sourceKind);
  require_finite(inst.c, "gvc1_complement_gvc2", "c");
  require_finite(inst.q0, "gvc1_complement_gvc2", "q0");
  require_finite(inst.q2, "gvc1_complement_gvc2", "q2");
  GvcReduction red;
  red.complement = true;
  red.target = inst;
  for (int v = 0; v < inst.n; ++v) red.target.c[v] = -inst.c[v];
  if (sourceKind == ProblemKind::GVC1) {
    red.targetKind = ProblemKind::GVC2;
    red.target.q2 = inst.q0;
    red.target.q0.assign(inst.m(), 0.0);
  } else {
    red.targetKind = ProblemKind::GVC1;
    red.target.q0 = inst.q2;
    red.target.q2.assign(inst.m(), 0.0);
  }
  red.offset = total(inst.c);
  return red;
}

Bqp01Reduction bipartite_to_bqp01(const GvcInstance& inst,
                                  const BipartitePartition& part,
                                  ProblemKind variant) {
  validate_partition(inst, part);
  if (variant != ProblemKind::GVC && variant != ProblemKind::GVC1 &&
      variant != ProblemKind::GVC2)
    throw PreconditionError("bipartite_to_bqp01: variant must be gvc/gvc1/gvc2");
  validate_kind(inst, variant);
  require_finite(inst.c, "bipartite_to_bqp01", "c");
  if (variant != ProblemKind::GVC2) {
    require_finite(inst.q0, "bipartite_to_bqp01", "q0");
    require_finite(inst.q1, "bipartite_to_bqp01", "q1");
    require_finite(inst.q2, "bipartite_to_bqp01", "q2");
  }

  Bqp01Reduction red;
  red.leftVertices = part.left;
  red.rightVertices = part.right;
  const int m = static_cast<int>(part.left.size());
  const int n = static_cast<int>(part.right.size());
  std::vector<int> row(inst.n, -1), col(inst.n, -1);
  for (int i = 0; i < m; ++i) row[part.left[i]] = i;
  for (int j = 0; j < n; ++j) col[part.right[j]] = j;

  std::vector<double> shift(inst.n, 0.0);
  if (variant == ProblemKind::GVC) {
    shift = incident_diff(inst, inst.q1, inst.q0);
    red.offset = total(inst.q0);
  } else if (variant == ProblemKind::GVC1) {
    for (int e = 0; e < inst.m(); ++e) {
      shift[inst.edges[e].u] -= inst.q0[e];
      shift[inst.edges[e].v] -= inst.q0[e];
    }
    red.offset = total(inst.q0);
  }

  std::vector<double> a(m), b(n);
  for (int i = 0; i < m; ++i) a[i] = inst.c[part.left[i]] + shift[part.left[i]];
  for (int j = 0; j < n; ++j) b[j] = inst.c[part.right[j]] + shift[part.right[j]];
  std::vector<std::vector<double>> q(m, std::vector<double>(n, 0.0));
  for (int e = 0; e < inst.m(); ++e) {
    const int u = inst.edges[e].u;
    const int v = inst.edges[e].v;
    const int i = row[u] != -1 ? row[u] : row[v];
    const int j = col[v] != -1 ? col[v] : col[u];
    double w = 0.0;
    if (variant == ProblemKind::GVC)
      w = inst.q2[e] - 2.0 * inst.q1[e] + inst.q0[e];
    else if (variant == ProblemKind::GVC1)
      w = inst.q0[e];
    else
      w = inst.q2[e];
    q[i][j] = w;
  }
  red.target = make_bqp01(m, n, std::move(a), std::move(b), std::move(q));
  return red;
}

GvcReduction vcpnew_normalize(const GvcInstance& inst, ProblemKind target) {
  validate_kind(inst, ProblemKind::VCPNEW);
  require_finite(inst.c, "vcpnew_normalize", "c");
  require_finite(inst.q1, "vcpnew_normalize", "q1");
  require_finite(inst.q2, "vcpnew_normalize", "q2");
  if (target != ProblemKind::VCOP && target != ProblemKind::VCUP)
    throw PreconditionError("vcpnew_normalize: target must be vcop or vcup");
  GvcReduction red;
  red.targetKind = target;
  red.target = inst;
  red.target.q0.assign(inst.m(), 0.0);
  for (int e = 0; e < inst.m(); ++e) {
    if (target == ProblemKind::VCOP) {
      red.target.q2[e] = inst.q2[e] - inst.q1[e];
      red.target.q1[e] = 0.0;
      red.offset += inst.q1[e];
    } else {
      red.target.q1[e] = inst.q1[e] - inst.q2[e];
      red.target.q2[e] = 0.0;
      red.offset += inst.q2[e];
    }
  }
  return red;
}

GvcReduction vcpnew_to_mwvcp(const GvcInstance& inst) {
  validate_kind(inst, ProblemKind::VCPNEW);
  require_finite(inst.c, "vcpnew_to_mwvcp", "c");
  require_finite(inst.q1, "vcpnew_to_mwvcp", "q1");
  require_finite(inst.q2, "vcpnew_to_mwvcp", "q2");
  GvcReduction red;
  red.targetKind = ProblemKind::MWVCP;
  red.target = inst;
  const std::vector<double> shift = incident_diff(inst, inst.q2, inst.q1);
  for (int v = 0; v < inst.n; ++v) red.target.c[v] = inst.c[v] + shift[v];
  red.target.q0.assign(inst.m(), 0.0);
  red.target.q1.assign(inst.m(), 0.0);
  red.target.q2.assign(inst.m(), 0.0);
  for (int e = 0; e < inst.m(); ++e)
    red.offset += 2.0 * inst.q1[e] - inst.q2[e];
  return red;
}

GvcReduction ispnew_normalize(const GvcInstance& inst, ProblemKind target) {
  validate_kind(inst, ProblemKind::ISPNEW);
  require_finite(inst.c, "ispnew_normalize", "c");
  require_finite(inst.q0, "ispnew_normalize", "q0");
  require_finite(inst.q1, "ispnew_normalize", "q1");
  if (target != ProblemKind::ISOP && target != ProblemKind::ISUP)
    throw PreconditionError("ispnew_normalize: target must be isop or isup");
  GvcReduction red;
  red.targetKind = target;
  red.target = inst;
  red.target.q2.assign(inst.m(), 0.0);
  for (int e = 0; e < inst.m(); ++e) {
    if (target == ProblemKind::ISOP) {
      red.target.q0[e] = inst.q0[e] - inst.q1[e];
      red.target.q1[e] = 0.0;
      red.offset += inst.q1[e];
    } else {
      red.target.q1[e] = inst.q1[e] - inst.q0[e];
      red.target.q0[e] = 0.0;
      red.offset += inst.q0[e];
    }
  }
  return red;
}

GvcReduction ispnew_to_mwisp(const GvcInstance& inst) {
  validate_kind(inst, ProblemKind::ISPNEW);
  require_finite(inst.c, "ispnew_to_mwisp", "c");
  require_finite(inst.q0, "ispnew_to_mwisp", "q0");
  require_finite(inst.q1, "ispnew_to_mwisp", "q1");
  GvcReduction red;
  red.targetKind = ProblemKind::MWISP;
  red.target = inst;
  const std::vector<double> shift = incident_diff(inst, inst.q1, inst.q0);
  for (int v = 0; v < inst.n; ++v) red.target.c[v] = inst.c[v] + shift[v];
  red.target.q0.assign(inst.m(), 0.0);
  red.target.q1.assign(inst.m(), 0.0);
  red.target.q2.assign(inst.m(), 0.0);
  red.offset = total(inst.q0);
  return red;
}

GvcReduction ispnew_complement_vcpnew(const GvcInstance& inst) {
  validate_kind(inst, ProblemKind::ISPNEW);
  require_finite(inst.c, "ispnew_complement_vcpnew", "c");
  require_finite(inst.q0, "ispnew_complement_vcpnew", "q0");
  require_finite(inst.q1, "ispnew_complement_vcpnew", "q1");
  GvcReduction red;
  red.targetKind = ProblemKind::VCPNEW;
  red.complement = true;
  red.senseSign = -1;
  red.target = inst;
  for (int e = 0; e < inst.m(); ++e) {
    red.target.q1[e] = -inst.q1[e];
    red.target.q2[e] = -inst.q0[e];
    red.target.q0[e] = 0.0;
  }
  red.offset = total(inst.c);
  return red;
}

}  // namespace gvc
