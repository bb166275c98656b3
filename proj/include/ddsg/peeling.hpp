#pragma once

#include <set>
#include <vector>

#include "ddsg/graph.hpp"

namespace ddsg {

// Record of one greedy peel: the removal order and the best suffix set seen.
// The i-th suffix is V minus the first i removed nodes; its edge count comes
// from incremental degree bookkeeping.
struct PeelTrace {
  std::vector<int> removal_order;
  Subset prefix_best;       // best suffix subject to the size floor
  Density prefix_best_density{0, 1};
  std::vector<long long> suffix_edge_counts;  // edge count before each removal
};

namespace peel_detail {

// Generic min-key peel. key(v) = load[v] + current degree; ties broken by
// the smallest node id. Records the best suffix of size >= min_size.
inline PeelTrace peel(const ColoredGraph& g,
                      const std::vector<long long>& loads, long long min_size,
                      std::vector<long long>* removal_degree = nullptr) {
  const int n = g.n();
  PeelTrace trace;
  std::vector<long long> deg(n, 0);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v)
    deg[v] = static_cast<long long>(g.adjacency[v].size());
  std::set<std::pair<long long, int>> queue;
  for (int v = 0; v < n; ++v) queue.insert({loads[v] + deg[v], v});

  long long edges_left = g.m();
  long long size_left = n;
  bool have_best = false;
  Density best{0, 1};
  long long best_size = 0;
  // snapshot members lazily: remember the suffix boundary, rebuild at end
  long long best_removed_prefix = 0;

  trace.suffix_edge_counts.reserve(n);
  while (size_left > 0) {
    trace.suffix_edge_counts.push_back(edges_left);
    if (size_left >= min_size) {
      Density d{edges_left, size_left};
      if (!have_best || d > best) {
        have_best = true;
        best = d;
        best_size = size_left;
        best_removed_prefix = trace.removal_order.size();
      }
    }
    auto it = queue.begin();
    int v = it->second;
    queue.erase(it);
    alive[v] = 0;
    if (removal_degree) (*removal_degree)[v] = deg[v];
    edges_left -= deg[v];
    --size_left;
    trace.removal_order.push_back(v);
    for (int w : g.adjacency[v]) {
      if (!alive[w]) continue;
      queue.erase({loads[w] + deg[w], w});
      --deg[w];
      queue.insert({loads[w] + deg[w], w});
    }
  }
  if (!have_best)
    throw InputError("peel: no suffix of size >= " + std::to_string(min_size));
  std::vector<int> members(trace.removal_order.begin() + best_removed_prefix,
                           trace.removal_order.end());
  trace.prefix_best = make_subset(g, members);
  trace.prefix_best_density = best;
  (void)best_size;
  return trace;
}

}  // namespace peel_detail

// Greedy peeling for the unconstrained problem: repeatedly remove a node of
// the smallest degree, return the densest suffix. 1/2-approximation.
inline Subset dsp_peel(const ColoredGraph& g) {
  if (g.n() == 0) throw InputError("empty graph");
  std::vector<long long> loads(g.n(), 0);
  return peel_detail::peel(g, loads, 1).prefix_best;
}

inline PeelTrace dsp_peel_trace(const ColoredGraph& g) {
  if (g.n() == 0) throw InputError("empty graph");
  std::vector<long long> loads(g.n(), 0);
  return peel_detail::peel(g, loads, 1);
}

// Load-augmented iterative peeling. Pass t peels by load + degree, where a
// node's load accumulates its degree at each removal. The first pass with
// zero loads reproduces dsp_peel's removal sequence. Returns the densest
// suffix over all passes.
inline Subset greedy_plus_plus(const ColoredGraph& g, int iterations) {
  if (g.n() == 0) throw InputError("empty graph");
  if (iterations < 1) throw InputError("greedy_plus_plus needs iterations >= 1");
  std::vector<long long> loads(g.n(), 0);
  std::vector<long long> removal_degree(g.n(), 0);
  bool have = false;
  Subset best;
  Density best_d{0, 1};
  for (int pass = 0; pass < iterations; ++pass) {
    PeelTrace t = peel_detail::peel(g, loads, 1, &removal_degree);
    if (!have || t.prefix_best_density > best_d) {
      have = true;
      best = t.prefix_best;
      best_d = t.prefix_best_density;
    }
    for (int v = 0; v < g.n(); ++v) loads[v] += removal_degree[v];
  }
  return best;
}

// Densest suffix of size >= k along the greedy peel. 1/3-approximation for
// the at-least-k problem.
inline Subset dalks_peel(const ColoredGraph& g, long long k) {
  if (k < 1 || k > g.n())
    throw InputError("dalks_peel: k must be in 1..n, got " + std::to_string(k));
  std::vector<long long> loads(g.n(), 0);
  return peel_detail::peel(g, loads, k).prefix_best;
}

}  // namespace ddsg
