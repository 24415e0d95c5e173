#ifndef ACTIVETIME_MAX_FLOW_HPP
#define ACTIVETIME_MAX_FLOW_HPP

#include <vector>

namespace activetime {

// Dinic's blocking-flow max-flow on small integer-capacity networks.
// Deterministic: BFS/DFS walk adjacency lists in insertion order, so
// identical edge insertion sequences produce identical flows.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Returns the edge id of the forward arc; the reverse arc is implicit.
  int add_edge(int from, int to, int capacity);

  int run(int source, int sink);

  // Flow pushed through a forward arc after run().
  int edge_flow(int edge_id) const;

 private:
  struct Arc {
    int to;
    int cap;
    int rev;  // index of the paired arc in adj_[to]
  };

  bool bfs(int source, int sink);
  int dfs(int v, int sink, int limit);

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<int, int>> edge_ref_;  // edge id -> (node, arc index)
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace activetime

#endif  // ACTIVETIME_MAX_FLOW_HPP
