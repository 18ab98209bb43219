#pragma once

// Dinic max-flow on doubles.  Capacities in these networks come from
// integer instance data, so the blocking-flow phases terminate exactly.

#include <vector>

namespace gvc {

class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  void add_edge(int from, int to, double cap);
  double solve(int source, int sink);

  // Nodes reachable from source in the residual graph (call after solve).
  std::vector<char> min_cut_side(int source) const;

  int nodes() const { return static_cast<int>(head_.size()); }

 private:
  struct Arc {
    int to;
    int next;
    double cap;
  };
  bool bfs(int source, int sink);
  double dfs(int v, int sink, double limit);

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace gvc
