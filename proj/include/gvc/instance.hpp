#pragma once

// Core data model: vertex/edge weighted instances, problem kinds, and
// subset evaluation.  Vertices are 0-based internally; the text format
// and all diagnostics use 1-based indices.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subset violates the feasibility rule of the requested kind.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

// Input does not satisfy a documented precondition of the routine.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an enumeration-based routine.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Bad generator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line) : Error(msg), line(line) {}
  int line = 0;
};

struct Edge {
  int u = 0;
  int v = 0;  // u < v after normalization
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Which q-fields enter the objective, which subsets are feasible, and
// which fields a kind forces to zero.
enum class ProblemKind {
  GVC,
  GVC1,
  GVC2,
  VCPNEW,
  VCOP,
  VCUP,
  ISPNEW,
  ISOP,
  ISUP,
  MWVCP,
  MWISP,
};

enum class Feasible { AnySubset, VertexCover, IndependentSet };

struct KindInfo {
  bool usesQ0 = false;
  bool usesQ1 = false;
  bool usesQ2 = false;
  Feasible feasible = Feasible::AnySubset;
  bool maximize = false;
  bool reqZeroQ0 = false;
  bool reqZeroQ1 = false;
  bool reqZeroQ2 = false;
};

const KindInfo& kind_info(ProblemKind kind);
const char* kind_name(ProblemKind kind);
std::optional<ProblemKind> kind_from_name(const std::string& name);

struct GvcInstance {
  int n = 0;
  std::vector<Edge> edges;  // sorted (u,v) ascending, unique
  std::vector<double> c;    // size n
  std::vector<double> q0;   // size edges.size(); finite or +inf
  std::vector<double> q1;
  std::vector<double> q2;

  int m() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const GvcInstance&, const GvcInstance&) = default;
};

// Validates and normalizes (u<v, edges sorted, duplicates rejected).
GvcInstance make_instance(int n, std::vector<Edge> edges, std::vector<double> c,
                          std::vector<double> q0, std::vector<double> q1,
                          std::vector<double> q2);

// Throws PreconditionError when a field the kind forces to zero is not zero.
void validate_kind(const GvcInstance& inst, ProblemKind kind);

struct IncidentEdge {
  int to = 0;
  int edge = 0;
};

std::vector<std::vector<IncidentEdge>> adjacency(const GvcInstance& inst);

struct SubsetSolution {
  std::vector<int> members;  // sorted, 0-based
  double value = 0.0;
  // edges with 0, 1, 2 endpoints in the subset
  std::array<std::size_t, 3> partitionCounts{0, 0, 0};
};

// Edge indices with 0/1/2 endpoints in the subset.
std::array<std::vector<int>, 3> edge_partition(const GvcInstance& inst,
                                               const std::vector<int>& members);

// Objective value of a subset under the kind's objective fields.  Throws
// FeasibilityError (naming a violated edge) for cover/independent kinds.
SubsetSolution evaluate(const GvcInstance& inst, ProblemKind kind,
                        const std::vector<int>& members);

// min a'x + sum_{i<j in U} 2*Q_ij over x in {0,1}^n; Q upper-triangular.
struct UbqpInstance {
  int n = 0;
  std::vector<double> a;
  std::vector<Edge> pairs;     // support pairs, sorted, u < v
  std::vector<double> q;       // Q_uv per pair
  friend bool operator==(const UbqpInstance&, const UbqpInstance&) = default;
};

UbqpInstance make_ubqp(int n, std::vector<double> a, std::vector<Edge> pairs,
                       std::vector<double> q);

double evaluate_ubqp(const UbqpInstance& inst, const std::vector<int>& members);

// Pairs with nonzero Q, as edges of a graph on 1..n.
std::vector<Edge> support_graph(const UbqpInstance& inst);

// min a'x + b'y + x'Qy over x in {0,1}^m, y in {0,1}^n.
struct Bqp01Instance {
  int m = 0;  // rows / left side
  int n = 0;  // cols / right side
  std::vector<double> a;
  std::vector<double> b;
  std::vector<std::vector<double>> q;  // m x n, dense
  friend bool operator==(const Bqp01Instance&, const Bqp01Instance&) = default;
};

Bqp01Instance make_bqp01(int m, int n, std::vector<double> a,
                         std::vector<double> b,
                         std::vector<std::vector<double>> q);

double evaluate_bqp01(const Bqp01Instance& inst, const std::vector<int>& left,
                      const std::vector<int>& right);

struct BipartitePartition {
  std::vector<int> left;   // sorted, 0-based
  std::vector<int> right;  // sorted, 0-based
  friend bool operator==(const BipartitePartition&,
                         const BipartitePartition&) = default;
};

// Every vertex on exactly one side, every edge crossing; else throws.
void validate_partition(const GvcInstance& inst, const BipartitePartition& p);

// BFS 2-coloring; nullopt when some component is not bipartite.
// Isolated vertices land on the left side.
std::optional<BipartitePartition> two_color(const GvcInstance& inst);

// G - v with vertices past v shifted down by one; q rows follow edges.
GvcInstance delete_vertex(const GvcInstance& inst, int v);

// Big-M constant: 1 + sum |c_i| + sum over finite edge weights of
// |q0|+|q1|+|q2|.  Infinite entries contribute nothing.
double big_m(const GvcInstance& inst);

bool all_finite(const GvcInstance& inst);

}  // namespace gvc
