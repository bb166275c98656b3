#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ddsg/errors.hpp"
#include "ddsg/ratio.hpp"

namespace ddsg {

// A density is the exact fraction |E(S)| / |S|. The raw numerator and
// denominator are preserved.
using Density = Frac;

// Immutable simple undirected graph with one color label per node.
// Node ids are 0..n-1, color ids are dense in first-appearance order of
// the labels. Safe to share across concurrent solver invocations once
// built.
struct ColoredGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;     // u < v, sorted, unique
  std::vector<int> color_of;                  // node id -> color id
  std::vector<std::string> color_labels;      // color id -> label
  std::vector<std::vector<int>> color_classes;  // color id -> sorted node ids
  std::vector<std::vector<int>> adjacency;    // sorted neighbor lists

  int n() const { return node_count; }
  long long m() const { return static_cast<long long>(edges.size()); }
  int color_count() const { return static_cast<int>(color_labels.size()); }

  bool has_edge(int u, int v) const {
    const auto& a = adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
  }
};

// A node subset with its cached statistics. Plain data; recomputable from
// the graph at any time.
struct Subset {
  std::vector<int> members;               // sorted node ids
  long long edge_count = 0;               // |E(S)|
  std::vector<long long> color_counts;    // per color id, sums to size()

  long long size() const { return static_cast<long long>(members.size()); }
};

struct DiversityStats {
  long long c_max = 0;  // size of the largest monochromatic group
  Frac alpha;           // c_max / |S|, raw
};

inline ColoredGraph build_graph(int n, std::vector<std::pair<int, int>> edges,
                                const std::vector<std::string>& colors) {
  if (n < 0) throw InputError("negative node count");
  if (static_cast<int>(colors.size()) != n)
    throw InputError("expected " + std::to_string(n) + " color labels, got " +
                     std::to_string(colors.size()));
  ColoredGraph g;
  g.node_count = n;
  for (auto& [u, v] : edges) {
    if (u == v)
      throw InputError("self-loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 0.." + std::to_string(n - 1));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw InputError("duplicate edge {" + std::to_string(edges[i].first) +
                       "," + std::to_string(edges[i].second) + "}");
  g.edges = std::move(edges);

  std::map<std::string, int> interned;
  g.color_of.resize(n);
  for (int v = 0; v < n; ++v) {
    auto it = interned.find(colors[v]);
    if (it == interned.end()) {
      int id = static_cast<int>(g.color_labels.size());
      interned.emplace(colors[v], id);
      g.color_labels.push_back(colors[v]);
      g.color_of[v] = id;
    } else {
      g.color_of[v] = it->second;
    }
  }
  g.color_classes.assign(g.color_labels.size(), {});
  for (int v = 0; v < n; ++v) g.color_classes[g.color_of[v]].push_back(v);

  g.adjacency.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

// Builds a Subset from node ids, computing the induced edge count and
// per-color counts. Rejects duplicates, out-of-range ids and the empty set.
inline Subset make_subset(const ColoredGraph& g, std::vector<int> ids) {
  if (ids.empty()) throw InputError("empty subset");
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= g.n())
      throw InputError("subset member " + std::to_string(ids[i]) +
                       " outside 0.." + std::to_string(g.n() - 1));
    if (i > 0 && ids[i] == ids[i - 1])
      throw InputError("duplicate subset member " + std::to_string(ids[i]));
  }
  Subset s;
  s.members = std::move(ids);
  s.color_counts.assign(g.color_count(), 0);
  std::vector<char> in_s(g.n(), 0);
  for (int v : s.members) {
    in_s[v] = 1;
    s.color_counts[g.color_of[v]]++;
  }
  for (int v : s.members)
    for (int w : g.adjacency[v])
      if (w > v && in_s[w]) s.edge_count++;
  return s;
}

inline Density density(const ColoredGraph&, const Subset& s) {
  if (s.members.empty()) throw InputError("density of the empty set");
  return Frac(s.edge_count, s.size());
}

inline DiversityStats diversity_stats(const ColoredGraph&, const Subset& s) {
  if (s.members.empty()) throw InputError("diversity of the empty set");
  long long c_max = 0;
  for (long long c : s.color_counts) c_max = std::max(c_max, c);
  return DiversityStats{c_max, Frac(c_max, s.size())};
}

// Dominance ratio of the whole node set, alpha(V).
inline Frac graph_alpha(const ColoredGraph& g) {
  if (g.n() == 0) throw InputError("alpha of the empty graph");
  long long c_max = 0;
  for (const auto& cls : g.color_classes)
    c_max = std::max(c_max, static_cast<long long>(cls.size()));
  return Frac(c_max, g.n());
}

}  // namespace ddsg
