#pragma once

#include <algorithm>
#include <vector>

#include "ddsg/graph.hpp"
#include "ddsg/lp.hpp"

namespace ddsg {

namespace dense_detail {

// Fractional relaxation with one x variable per edge and one y per node:
// x_e <= y_u, x_e <= y_v, sum y = 1, optionally y_v <= 1/cap. Variables are
// laid out edges first, then nodes.
inline LpModel charikar_model(const ColoredGraph& g,
                              std::optional<long long> cap) {
  LpModel m;
  const long long mm = g.m();
  for (long long e = 0; e < mm; ++e) m.add_var(Rat(1));
  for (int v = 0; v < g.n(); ++v) m.add_var(Rat(0));
  auto yvar = [&](int v) { return static_cast<int>(mm) + v; };
  for (long long e = 0; e < mm; ++e) {
    const auto& [u, v] = g.edges[e];
    m.add_row({{static_cast<int>(e), Rat(1)}, {yvar(u), Rat(-1)}}, Rel::Le, 0);
    m.add_row({{static_cast<int>(e), Rat(1)}, {yvar(v), Rat(-1)}}, Rel::Le, 0);
  }
  std::vector<std::pair<int, Rat>> mass;
  for (int v = 0; v < g.n(); ++v) mass.push_back({yvar(v), Rat(1)});
  m.add_row(mass, Rel::Eq, Rat(1));
  if (cap)
    for (int v = 0; v < g.n(); ++v)
      m.add_row({{yvar(v), Rat(1)}}, Rel::Le, rat_of(1, *cap));
  return m;
}

// Level sets {v : y*_v >= r} for each distinct threshold r, descending.
inline std::vector<std::vector<int>> level_sets(const ColoredGraph& g,
                                                const std::vector<Rat>& y,
                                                bool include_zero) {
  std::vector<Rat> thresholds = y;
  std::sort(thresholds.begin(), thresholds.end(),
            [](const Rat& a, const Rat& b) { return cmp(a, b) > 0; });
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end(),
                               [](const Rat& a, const Rat& b) {
                                 return cmp(a, b) == 0;
                               }),
                   thresholds.end());
  if (include_zero && (thresholds.empty() || sgn(thresholds.back()) != 0))
    thresholds.push_back(Rat(0));
  std::vector<std::vector<int>> sets;
  for (const Rat& r : thresholds) {
    std::vector<int> s;
    for (int v = 0; v < g.n(); ++v)
      if (cmp(y[v], r) >= 0) s.push_back(v);
    if (!s.empty()) sets.push_back(std::move(s));
  }
  return sets;
}

inline std::vector<Rat> node_values(const ColoredGraph& g,
                                    const LpSolution& sol) {
  std::vector<Rat> y(g.n());
  for (int v = 0; v < g.n(); ++v) y[v] = sol.primal[g.m() + v];
  return y;
}

// Among candidates of equal density prefer the lexicographically smallest
// member sequence, so outputs are reproducible.
inline bool better(const ColoredGraph& g, const Subset& cand,
                   const Subset& best, bool have_best) {
  if (!have_best) return true;
  Density dc = density(g, cand), db = density(g, best);
  if (dc != db) return dc > db;
  return cand.members < best.members;
}

// Grows s to the target size by repeatedly adding the outside node with the
// most edges into s, ties to the smallest id.
inline Subset pad_to_size(const ColoredGraph& g, Subset s, long long target) {
  if (s.size() >= target) return s;
  std::vector<char> in_s(g.n(), 0);
  std::vector<long long> deg_in(g.n(), 0);
  for (int v : s.members) in_s[v] = 1;
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.adjacency[v])
      if (in_s[w]) deg_in[v]++;
  std::vector<int> members = s.members;
  while (static_cast<long long>(members.size()) < target) {
    int pick = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (in_s[v]) continue;
      if (pick < 0 || deg_in[v] > deg_in[pick]) pick = v;
    }
    if (pick < 0) break;  // cannot happen while target <= n
    in_s[pick] = 1;
    members.push_back(pick);
    for (int w : g.adjacency[pick]) deg_in[w]++;
  }
  return make_subset(g, members);
}

}  // namespace dense_detail

// Exact densest subgraph via the fractional relaxation and a level-set
// sweep: the densest S(r) over r in {y*_v} attains the LP optimum, which is
// the unconstrained optimum. Used as the normalizing denominator for
// reported densities.
inline Subset dsp_exact(const ColoredGraph& g, SolveStats* stats = nullptr) {
  if (g.n() == 0) throw InputError("empty graph");
  if (g.m() == 0) return make_subset(g, {0});  // any single node, density 0
  LpModel model = dense_detail::charikar_model(g, std::nullopt);
  LpSolution sol = solve_lp(model, stats);
  if (sol.status != LpStatus::Optimal)
    throw SolverError("densest-subgraph relaxation did not solve");
  auto y = dense_detail::node_values(g, sol);
  Subset best;
  bool have = false;
  for (auto& ids : dense_detail::level_sets(g, y, false)) {
    Subset cand = make_subset(g, ids);
    if (dense_detail::better(g, cand, best, have)) {
      best = std::move(cand);
      have = true;
    }
  }
  if (!have) throw SolverError("level-set sweep produced no candidate");
  return best;
}

// LP route for densest-at-least-k: cap y_v <= 1/k, sweep level sets plus
// r = 0, pad undersized candidates up to k by max degree into the set.
// 1/2-approximation.
inline Subset dalks_lp(const ColoredGraph& g, long long k,
                       SolveStats* stats = nullptr) {
  if (k < 1 || k > g.n())
    throw InputError("dalks_lp: k must be in 1..n, got " + std::to_string(k));
  LpModel model = dense_detail::charikar_model(g, k);
  LpSolution sol = solve_lp(model, stats);
  if (sol.status != LpStatus::Optimal)
    throw SolverError("at-least-k relaxation did not solve");
  auto y = dense_detail::node_values(g, sol);
  Subset best;
  bool have = false;
  for (auto& ids : dense_detail::level_sets(g, y, true)) {
    Subset cand = dense_detail::pad_to_size(g, make_subset(g, ids), k);
    if (dense_detail::better(g, cand, best, have)) {
      best = std::move(cand);
      have = true;
    }
  }
  if (!have) throw SolverError("level-set sweep produced no candidate");
  return best;
}

}  // namespace ddsg
