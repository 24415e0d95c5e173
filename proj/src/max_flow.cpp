#include "activetime/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace activetime {

MaxFlow::MaxFlow(int node_count) : adj_(node_count) {}

int MaxFlow::add_edge(int from, int to, int capacity) {
  int id = static_cast<int>(edge_ref_.size());
  adj_[from].push_back({to, capacity, static_cast<int>(adj_[to].size())});
  adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
  edge_ref_.emplace_back(from, static_cast<int>(adj_[from].size()) - 1);
  return id;
}

bool MaxFlow::bfs(int source, int sink) {
  level_.assign(adj_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Arc& arc : adj_[v]) {
      if (arc.cap > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int MaxFlow::dfs(int v, int sink, int limit) {
  if (v == sink) return limit;
  for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
    Arc& arc = adj_[v][i];
    if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
    int pushed = dfs(arc.to, sink, std::min(limit, arc.cap));
    if (pushed > 0) {
      arc.cap -= pushed;
      adj_[arc.to][arc.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

int MaxFlow::run(int source, int sink) {
  int flow = 0;
  while (bfs(source, sink)) {
    iter_.assign(adj_.size(), 0);
    while (int pushed = dfs(source, sink, std::numeric_limits<int>::max())) flow += pushed;
  }
  return flow;
}

int MaxFlow::edge_flow(int edge_id) const {
  auto [node, index] = edge_ref_[edge_id];
  const Arc& arc = adj_[node][index];
  // Residual on the reverse arc equals the flow pushed forward.
  return adj_[arc.to][arc.rev].cap;
}

}  // namespace activetime
