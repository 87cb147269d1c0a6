#include "udgc/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace udgc {

MaxFlow::MaxFlow(int num_nodes)
    : graph_(num_nodes), level_(num_nodes), iter_(num_nodes) {}

int MaxFlow::add_edge(int from, int to, int64_t capacity) {
    const int idx = static_cast<int>(edges_.size());
    graph_[from].push_back(idx);
    edges_.push_back({to, capacity, idx + 1});
    graph_[to].push_back(idx + 1);
    edges_.push_back({from, 0, idx});
    return idx;
}

bool MaxFlow::bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int idx : graph_[v]) {
            const Edge& e = edges_[idx];
            if (e.cap > 0 && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                q.push(e.to);
            }
        }
    }
    return level_[t] >= 0;
}

int64_t MaxFlow::dfs(int v, int t, int64_t pushed) {
    if (v == t) return pushed;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
        const int idx = graph_[v][i];
        Edge& e = edges_[idx];
        if (e.cap > 0 && level_[e.to] == level_[v] + 1) {
            const int64_t d = dfs(e.to, t, std::min(pushed, e.cap));
            if (d > 0) {
                e.cap -= d;
                edges_[e.twin].cap += d;
                return d;
            }
        }
    }
    return 0;
}

int64_t MaxFlow::run(int source, int sink) {
    int64_t flow = 0;
    while (bfs(source, sink)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (int64_t f = dfs(source, sink, std::numeric_limits<int64_t>::max())) {
            flow += f;
        }
    }
    return flow;
}

int64_t MaxFlow::flow_on(int edge_index) const {
    return edges_[edge_index + 1].cap;  // flow = capacity pushed onto the twin
}

}  // namespace udgc
