#pragma once

// Affine reductions between problem kinds.  Every reduction carries an
// offset (and possibly a sign flip) such that for each feasible subset
// U of the target,
//
//   sourceValue(map_back(U)) = senseSign * targetValue(U) + offset.
//
// Reductions refuse infinite weights in any field their formulas read.

#include "gvc/instance.hpp"

namespace gvc {

struct GvcReduction {
  GvcInstance target;
  ProblemKind targetKind = ProblemKind::GVC;
  double offset = 0.0;
  bool complement = false;  // map_back(U) = V \ U
  int senseSign = 1;

  std::vector<int> map_back(const std::vector<int>& subset) const;
};

struct UbqpReduction {
  UbqpInstance target;
  double offset = 0.0;
  // map_back is the identity: variable i <-> vertex i
};

struct Bqp01Reduction {
  Bqp01Instance target;
  double offset = 0.0;
  std::vector<int> leftVertices;   // row index -> vertex
  std::vector<int> rightVertices;  // col index -> vertex

  std::vector<int> map_back(const std::vector<int>& left,
                            const std::vector<int>& right) const;
};

// Push quadratic structure into the edge-free field: q0' = q2 - 2q1 + q0.
GvcReduction gvc_to_gvc1(const GvcInstance& inst);

// Push it into the both-endpoints field: q2'' = q2 - 2q1 + q0.
GvcReduction gvc_to_gvc2(const GvcInstance& inst);

UbqpReduction gvc_to_ubqp(const GvcInstance& inst);
UbqpReduction gvc1_to_ubqp(const GvcInstance& inst);
UbqpReduction gvc2_to_ubqp(const GvcInstance& inst);

// Reverse direction, over the support graph of Q.
GvcReduction ubqp_to_gvc2(const UbqpInstance& inst);

// Complementing the subset swaps the roles of q0 and q2.  sourceKind
// selects the direction (GVC1 -> GVC2 or GVC2 -> GVC1); the map is an
// involution.
GvcReduction gvc1_complement_gvc2(const GvcInstance& inst,
                                  ProblemKind sourceKind);

// variant selects which formula family to apply (GVC, GVC1 or GVC2).
Bqp01Reduction bipartite_to_bqp01(const GvcInstance& inst,
                                  const BipartitePartition& part,
                                  ProblemKind variant);

// target is VCOP (q1 folded into q2) or VCUP (q2 folded into q1).
GvcReduction vcpnew_normalize(const GvcInstance& inst, ProblemKind target);

GvcReduction vcpnew_to_mwvcp(const GvcInstance& inst);

// target is ISOP (q1 folded into q0) or ISUP (q0 folded into q1).
GvcReduction ispnew_normalize(const GvcInstance& inst, ProblemKind target);

GvcReduction ispnew_to_mwisp(const GvcInstance& inst);

// Covers of the target correspond to independent sets of the source via
// complement; the objective flips sign (senseSign = -1).
GvcReduction ispnew_complement_vcpnew(const GvcInstance& inst);

}  // namespace gvc
