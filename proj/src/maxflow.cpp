#include "gvc/maxflow.hpp"

#include <limits>
#include <queue>

namespace gvc {

namespace {
constexpr double kEps = 1e-9;
}

void MaxFlow::add_edge(int from, int to, double cap) {
  arcs_.push_back({to, head_[from], cap});
  head_[from] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({from, head_[to], 0.0});
  head_[to] = static_cast<int>(arcs_.size()) - 1;
}

bool MaxFlow::bfs(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].cap > kEps && level_[arcs_[a].to] == -1) {
        level_[arcs_[a].to] = level_[v] + 1;
        q.push(arcs_[a].to);
      }
    }
  }
  return level_[sink] != -1;
}

double MaxFlow::dfs(int v, int sink, double limit) {
  if (v == sink) return limit;
  for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    if (arc.cap <= kEps || level_[arc.to] != level_[v] + 1) continue;
    const double pushed = dfs(arc.to, sink, std::min(limit, arc.cap));
    if (pushed > kEps) {
      arc.cap -= pushed;
      arcs_[a ^ 1].cap += pushed;
      return pushed;
    }
  }
  level_[v] = -1;
  return 0.0;
}

double MaxFlow::solve(int source, int sink) {
  double flow = 0.0;
  while (bfs(source, sink)) {
    iter_ = head_;
    for (;;) {
      const double pushed =
          dfs(source, sink, std::numeric_limits<double>::infinity());
      if (pushed <= kEps) break;
      flow += pushed;
    }
  }
  return flow;
}

std::vector<char> MaxFlow::min_cut_side(int source) const {
  std::vector<char> side(head_.size(), 0);
  std::queue<int> q;
  side[source] = 1;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].cap > kEps && !side[arcs_[a].to]) {
        side[arcs_[a].to] = 1;
        q.push(arcs_[a].to);
      }
    }
  }
  return side;
}

}  // namespace gvc
