#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace hquat {

/// Dinic max-flow on small integer networks; enough for the exact
/// connectivity computations on the n = 1 graph.
class MaxFlowNetwork {
 public:
  explicit MaxFlowNetwork(int nodes) : head_(nodes) {}

  void add_edge(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    head_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      iter_.assign(head_.size(), 0);
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
    }
    return flow;
  }

  /// Residual capacities are consumed by run(); rebuild for another pair.
  void reset_to(const MaxFlowNetwork& pristine) { edges_ = pristine.edges_; }

 private:
  struct Edge {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : head_[u]) {
        const Edge& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int limit) {
    if (u == t) return limit;
    for (std::size_t& i = iter_[u]; i < head_[u].size(); ++i) {
      int id = head_[u][i];
      Edge& e = edges_[id];
      if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
      int pushed = dfs(e.to, t, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        edges_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

/// Exact vertex connectivity by Menger: minimum over non-adjacent pairs of
/// the vertex-split max-flow. Intended for the 14-vertex n = 1 graph.
inline int vertex_connectivity_exact(const GraphSnapshot& g) {
  int v = static_cast<int>(g.vertex_count());
  const int kInf = 1 << 24;
  int best = kInf;
  bool found_pair = false;
  for (int s = 0; s < v; ++s)
    for (int t = s + 1; t < v; ++t) {
      if (g.adjacent(static_cast<std::size_t>(s), static_cast<std::size_t>(t))) continue;
      found_pair = true;
      // node 2u = in, 2u+1 = out
      MaxFlowNetwork net(2 * v);
      for (int u = 0; u < v; ++u) net.add_edge(2 * u, 2 * u + 1, 1);
      for (int a = 0; a < v; ++a)
        g.for_each_neighbor(static_cast<std::size_t>(a), [&](std::size_t b) {
          net.add_edge(2 * a + 1, 2 * static_cast<int>(b), kInf);
        });
      best = std::min(best, net.run(2 * s + 1, 2 * t));
    }
  if (!found_pair) return v - 1;  // complete graph
  return best;
}

/// Exact edge connectivity: min over targets of max-flow from a fixed
/// source, each undirected edge carrying capacity one in both directions.
inline int edge_connectivity_exact(const GraphSnapshot& g) {
  int v = static_cast<int>(g.vertex_count());
  if (v < 2) return 0;
  int best = std::numeric_limits<int>::max();
  for (int t = 1; t < v; ++t) {
    MaxFlowNetwork net(v);
    for (int a = 0; a < v; ++a)
      g.for_each_neighbor(static_cast<std::size_t>(a), [&](std::size_t b) {
        if (static_cast<int>(b) > a) {
          net.add_edge(a, static_cast<int>(b), 1);
          net.add_edge(static_cast<int>(b), a, 1);
        }
      });
    best = std::min(best, net.run(0, t));
  }
  return best;
}

}  // namespace hquat
