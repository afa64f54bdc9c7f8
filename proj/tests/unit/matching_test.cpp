#include <catch_amalgamated.hpp>

#include <rsumlab/enumerate.hpp>
#include <rsumlab/error.hpp>
#include <rsumlab/matching.hpp>

#include "oracle.hpp"

using namespace rsumlab;

TEST_CASE("maximum matching on small graphs", "[matching]") {
  BipartiteGraph g(3, 3);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  g.add_edge(2, 0);
  g.add_edge(2, 2);
  const auto m = maximum_matching(g);
  CHECK(m.size == 2);
  CHECK(m.left_to_right[1] == kUnmatched);

  BipartiteGraph empty(4, 0);
  CHECK(maximum_matching(empty).size == 0);

  // Greedy would take 0-0 and strand vertex 1; augmentation must reroute.
  BipartiteGraph aug(2, 2);
  aug.add_edge(0, 0);
  aug.add_edge(0, 1);
  aug.add_edge(1, 0);
  CHECK(maximum_matching(aug).size == 2);

  CHECK_THROWS(g.add_edge(3, 0));
  CHECK_THROWS(g.add_edge(0, 3));
}

TEST_CASE("matching size agrees with exhaustive search", "[matching]") {
  SplitMix64 rng(41);
  for (int round = 0; round < 400; ++round) {
    const std::size_t left = 1 + rng.below(8), right = 1 + rng.below(10);
    const auto density = 1 + rng.below(6);
    BipartiteGraph g(left, right);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < left; ++u) {
      for (std::size_t v = 0; v < right; ++v) {
        if (rng.below(6) < density) {
          g.add_edge(u, v);
          edges.emplace_back(u, v);
        }
      }
    }
    const auto m = maximum_matching(g);
    CHECK(m.size == oracle::max_matching(left, right, edges));
    std::size_t counted = 0;
    for (std::size_t u = 0; u < left; ++u) {
      const auto v = m.left_to_right[u];
      if (v == kUnmatched) continue;
      ++counted;
      CHECK(m.right_to_left[v] == u);
      const auto& nb = g.neighbors(u);
      CHECK(std::find(nb.begin(), nb.end(), v) != nb.end());
    }
    CHECK(counted == m.size);
    CHECK(maximum_matching(g).left_to_right == m.left_to_right);
  }
}

TEST_CASE("large sparse matching", "[matching]") {
  const std::size_t n = 2000;
  BipartiteGraph g(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    g.add_edge(u, u);
    if (u + 1 < n) g.add_edge(u, u + 1);
  }
  // Edges toward u+1 first would be the natural greedy trap.
  BipartiteGraph h(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (u + 1 < n) h.add_edge(u, u + 1);
    h.add_edge(u, u);
  }
  CHECK(maximum_matching(g).size == n);
  CHECK(maximum_matching(h).size == n);
}
