#pragma once

#include "ddsg/graph.hpp"

// Canonical tiny graphs used throughout the test suites and docs.
namespace ddsg::fixtures {

// Monochromatic triangle.
inline ColoredGraph t3() {
  return build_graph(3, {{0, 1}, {0, 2}, {1, 2}}, {"a", "a", "a"});
}

// K4 with a balanced two-coloring.
inline ColoredGraph k4b() {
  return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                     {"a", "a", "b", "b"});
}

// Two disjoint triangles, one per color.
inline ColoredGraph two_triangles() {
  return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}},
                     {"r", "r", "r", "b", "b", "b"});
}

// K5 on {0..4} (color r) plus a pendant blue node 5 attached to node 0.
inline ColoredGraph k5p() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
  edges.push_back({0, 5});
  return build_graph(6, edges, {"r", "r", "r", "r", "r", "b"});
}

// Path 0-1-2-3 with alternating colors.
inline ColoredGraph p4() {
  return build_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {"a", "b", "a", "b"});
}

}  // namespace ddsg::fixtures
