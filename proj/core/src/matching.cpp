#include "rsumlab/matching.hpp"

#include <queue>

#include "rsumlab/error.hpp"

namespace rsumlab {

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right) : adj_(left), right_(right) {}

void BipartiteGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= right_) throw DomainError("edge endpoint out of range");
  adj_[u].push_back(v);
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

struct HopcroftKarp {
  const BipartiteGraph& g;
  Matching m;
  std::vector<std::size_t> dist;
  std::vector<std::size_t> cursor;

  explicit HopcroftKarp(const BipartiteGraph& graph)
      : g(graph), dist(graph.left_size()), cursor(graph.left_size()) {
    m.left_to_right.assign(g.left_size(), kUnmatched);
    m.right_to_left.assign(g.right_size(), kUnmatched);
  }

  bool bfs() {
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < g.left_size(); ++u) {
      if (m.left_to_right[u] == kUnmatched) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : g.neighbors(u)) {
        const auto w = m.right_to_left[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS; explicit stack keeps deep graphs off the call stack.
  bool augment(std::size_t root) {
    std::vector<std::size_t> path{root};
    while (!path.empty()) {
      const auto u = path.back();
      const auto& nb = g.neighbors(u);
      bool advanced = false;
      while (cursor[u] < nb.size()) {
        const auto v = nb[cursor[u]];
        const auto w = m.right_to_left[v];
        if (w == kUnmatched) {
          // Flip the alternating path.
          for (std::size_t i = path.size(); i-- > 0;) {
            const auto x = path[i];
            const auto y = g.neighbors(x)[cursor[x]];
            m.left_to_right[x] = y;
            m.right_to_left[y] = x;
          }
          return true;
        }
        if (dist[w] == dist[u] + 1) {
          path.push_back(w);
          advanced = true;
          break;
        }
        ++cursor[u];
      }
      if (advanced) continue;
      dist[u] = kInf;
      path.pop_back();
      if (!path.empty()) ++cursor[path.back()];
    }
    return false;
  }

  Matching run() {
    while (bfs()) {
      std::fill(cursor.begin(), cursor.end(), 0);
      for (std::size_t u = 0; u < g.left_size(); ++u) {
        if (m.left_to_right[u] == kUnmatched && augment(u)) ++m.size;
      }
    }
    return std::move(m);
  }
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) { return HopcroftKarp(g).run(); }

}  // namespace rsumlab
