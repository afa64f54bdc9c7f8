#pragma once

// Maximum bipartite matching (Hopcroft-Karp).

#include <cstddef>
#include <limits>
#include <vector>

namespace rsumlab {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left, std::size_t right);

  std::size_t left_size() const { return adj_.size(); }
  std::size_t right_size() const { return right_; }

  /// Edges are explored in insertion order, which fixes the matching returned.
  void add_edge(std::size_t u, std::size_t v);
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t right_;
};

struct Matching {
  std::vector<std::size_t> left_to_right;   // kUnmatched when free
  std::vector<std::size_t> right_to_left;
  std::size_t size = 0;
};

Matching maximum_matching(const BipartiteGraph& g);

}  // namespace rsumlab
