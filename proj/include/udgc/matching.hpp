// Small deterministic max-flow (Dinic) used for bipartite matching and
// weighted vertex covers inside the clique and strip-coloring routines.
#pragma once

#include <cstdint>
#include <vector>

namespace udgc {

class MaxFlow {
  public:
    explicit MaxFlow(int num_nodes);

    // Returns the index of the forward edge (its twin is index+1).
    int add_edge(int from, int to, int64_t capacity);

    int64_t run(int source, int sink);

    // Flow currently on forward edge `edge_index` (as returned by add_edge).
    int64_t flow_on(int edge_index) const;

  private:
    struct Edge {
        int to;
        int64_t cap;
        int twin;
    };
    bool bfs(int s, int t);
    int64_t dfs(int v, int t, int64_t pushed);

    std::vector<Edge> edges_;
    std::vector<std::vector<int>> graph_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace udgc
