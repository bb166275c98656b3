#pragma once

#include <optional>
#include <vector>

#include "ddsg/dense_lp.hpp"
#include "ddsg/graph.hpp"
#include "ddsg/lp.hpp"
#include "ddsg/peeling.hpp"

namespace ddsg {

// Per-color lower bounds k_c. Valid against a graph when every k_c fits in
// its color class and at least one demand is positive (an all-zero demand is
// the unconstrained problem; use the plain densest-subgraph solvers).
struct DemandVector {
  std::vector<long long> k;  // indexed by color id

  long long l1() const {
    long long s = 0;
    for (long long v : k) s += v;
    return s;
  }
};

inline void validate_demand(const ColoredGraph& g, const DemandVector& d) {
  if (static_cast<int>(d.k.size()) != g.color_count())
    throw InputError("demand vector has " + std::to_string(d.k.size()) +
                     " entries for " + std::to_string(g.color_count()) +
                     " colors");
  bool any = false;
  for (int c = 0; c < g.color_count(); ++c) {
    if (d.k[c] < 0) throw InputError("negative demand for color '" +
                                     g.color_labels[c] + "'");
    if (d.k[c] > static_cast<long long>(g.color_classes[c].size()))
      throw InfeasibleError(
          "demand " + std::to_string(d.k[c]) + " for color '" +
          g.color_labels[c] + "' exceeds its " +
          std::to_string(g.color_classes[c].size()) + " nodes");
    any |= d.k[c] >= 1;
  }
  if (!any)
    throw InputError(
        "all demands are zero; the instance is the unconstrained problem");
}

inline bool subset_meets_demand(const Subset& s, const DemandVector& d) {
  for (size_t c = 0; c < d.k.size(); ++c)
    if (s.color_counts[c] < d.k[c]) return false;
  return true;
}

// Per-color mass vector p parameterizing the relaxation, k <= p <= |V_c|.
struct PVector {
  std::vector<long long> p;

  long long l1() const {
    long long s = 0;
    for (long long v : p) s += v;
    return s;
  }
};

// The relaxation parameterized by p: maximize sum x_e subject to
//   x_e <= y_u, x_e <= y_v          for every edge,
//   sum_{v in V_c} y_v = p_c/|p|_1  for every color,
//   y_v <= 1/|p|_1                  for every node,
//   x, y >= 0.
// Variables are laid out edges first, then nodes.
inline LpModel build_lp_p(const ColoredGraph& g, const PVector& pv) {
  if (static_cast<int>(pv.p.size()) != g.color_count())
    throw InputError("p vector size does not match the color count");
  for (int c = 0; c < g.color_count(); ++c)
    if (pv.p[c] < 0 ||
        pv.p[c] > static_cast<long long>(g.color_classes[c].size()))
      throw InputError("p_c out of range for color '" + g.color_labels[c] +
                       "'");
  const long long p1 = pv.l1();
  if (p1 < 1) throw InputError("p vector must have |p|_1 >= 1");
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
  for (int c = 0; c < g.color_count(); ++c) {
    std::vector<std::pair<int, Rat>> row;
    for (int v : g.color_classes[c]) row.push_back({yvar(v), Rat(1)});
    m.add_row(row, Rel::Eq, rat_of(pv.p[c], p1));
  }
  for (int v = 0; v < g.n(); ++v)
    m.add_row({{yvar(v), Rat(1)}}, Rel::Le, rat_of(1, p1));
  return m;
}

// Adds, for each color short of its demand, the missing number of nodes of
// that color, each chosen by most edges into the current set, ties to the
// smallest id.
inline Subset make_it_feasible(const ColoredGraph& g, const Subset& s,
                               const DemandVector& d) {
  std::vector<char> in_s(g.n(), 0);
  std::vector<long long> deg_in(g.n(), 0);
  std::vector<long long> counts(g.color_count(), 0);
  for (int v : s.members) {
    in_s[v] = 1;
    counts[g.color_of[v]]++;
  }
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.adjacency[v])
      if (in_s[w]) deg_in[v]++;
  std::vector<int> members = s.members;
  for (int c = 0; c < g.color_count(); ++c) {
    while (counts[c] < d.k[c]) {
      int pick = -1;
      for (int v : g.color_classes[c]) {
        if (in_s[v]) continue;
        if (pick < 0 || deg_in[v] > deg_in[pick]) pick = v;
      }
      if (pick < 0)
        throw InfeasibleError("color '" + g.color_labels[c] +
                              "' cannot reach its demand");
      in_s[pick] = 1;
      counts[c]++;
      members.push_back(pick);
      for (int w : g.adjacency[pick]) deg_in[w]++;
    }
  }
  return make_subset(g, members);
}

// One level-set candidate: the raw set at a threshold, the colors whose
// demand it already satisfies, and its demand-feasible completion.
struct SweepCandidate {
  Rat threshold;
  Subset raw_set;
  std::vector<int> c_sat;
  Subset feasible_set;
};

// Builds the candidate list for an optimal relaxation solution: one
// candidate per distinct threshold in {y*_v} plus zero, descending; raw sets
// are nested; empty raw sets are skipped.
inline std::vector<SweepCandidate> sweep_candidates(const ColoredGraph& g,
                                                    const DemandVector& d,
                                                    const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal)
    throw InputError("sweep needs an optimal relaxation solution");
  std::vector<Rat> y(g.n());
  for (int v = 0; v < g.n(); ++v) y[v] = sol.primal[g.m() + v];
  std::vector<Rat> thresholds = y;
  std::sort(thresholds.begin(), thresholds.end(),
            [](const Rat& a, const Rat& b) { return cmp(a, b) > 0; });
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end(),
                               [](const Rat& a, const Rat& b) {
                                 return cmp(a, b) == 0;
                               }),
                   thresholds.end());
  if (thresholds.empty() || sgn(thresholds.back()) != 0)
    thresholds.push_back(Rat(0));
  std::vector<SweepCandidate> out;
  for (const Rat& r : thresholds) {
    std::vector<int> ids;
    for (int v = 0; v < g.n(); ++v)
      if (cmp(y[v], r) >= 0) ids.push_back(v);
    if (ids.empty()) continue;
    SweepCandidate cand;
    cand.threshold = r;
    cand.raw_set = make_subset(g, ids);
    for (int c = 0; c < g.color_count(); ++c)
      if (cand.raw_set.color_counts[c] >= d.k[c]) cand.c_sat.push_back(c);
    cand.feasible_set = make_it_feasible(g, cand.raw_set, d);
    out.push_back(std::move(cand));
  }
  return out;
}

struct DalvksOptions {
  bool prune = true;  // skip sweeping when the relaxation value cannot win
  // restrict the enumeration to p with p_c = k_c for some demanded color
  bool pin_some_coordinate = false;
};

// Enumerates every p with k <= p <= (|V_c|), lexicographically ascending by
// color id; solves the relaxation and keeps the densest feasible completion
// over all sweeps. With pruning on, a p whose relaxation value is strictly
// below the incumbent density skips its sweep (the relaxation is still
// solved and counted). 1/3-approximation.
inline Subset dalvks_lp_full(const ColoredGraph& g, const DemandVector& d,
                             DalvksOptions opts = {},
                             SolveStats* stats = nullptr) {
  validate_demand(g, d);
  const int nc = g.color_count();
  std::vector<long long> p = d.k;
  std::optional<Subset> best;
  std::optional<Density> best_density;
  auto pinned = [&] {
    for (int c = 0; c < nc; ++c)
      if (d.k[c] >= 1 && p[c] == d.k[c]) return true;
    return false;
  };
  while (true) {
    if (!opts.pin_some_coordinate || pinned()) {
      LpSolution sol = solve_lp(build_lp_p(g, PVector{p}), stats);
      if (sol.status != LpStatus::Optimal)
        throw SolverError("relaxation did not solve for a valid p");
      bool skip = opts.prune && best_density &&
                  cmp(sol.objective_value, rat_of(*best_density)) < 0;
      if (!skip) {
        for (const auto& cand : sweep_candidates(g, d, sol)) {
          Density cd = density(g, cand.feasible_set);
          if (!best_density || cd > *best_density) {
            best_density = cd;
            best = cand.feasible_set;
          }
        }
      }
    }
    // next p, odometer over [k_c, |V_c|] per color
    int c = 0;
    for (; c < nc; ++c) {
      if (p[c] < static_cast<long long>(g.color_classes[c].size())) {
        ++p[c];
        break;
      }
      p[c] = d.k[c];
    }
    if (c == nc) break;
  }
  if (!best) throw SolverError("enumeration produced no feasible candidate");
  return *best;
}

// Greedy peeling: remove the globally min-degree node while every demanded
// color keeps strictly more than its demand, record each suffix, return the
// densest. Every recorded set is feasible by the loop guard. 1/2-approximate
// whenever some optimal solution has slack in every demanded color.
inline Subset dalvks_peel(const ColoredGraph& g, const DemandVector& d) {
  validate_demand(g, d);
  std::vector<long long> deg(g.n());
  std::vector<char> alive(g.n(), 1);
  std::vector<long long> counts(g.color_count(), 0);
  for (int v = 0; v < g.n(); ++v) {
    deg[v] = static_cast<long long>(g.adjacency[v].size());
    counts[g.color_of[v]]++;
  }
  std::set<std::pair<long long, int>> queue;
  for (int v = 0; v < g.n(); ++v) queue.insert({deg[v], v});
  long long edges_left = g.m();
  long long size_left = g.n();

  std::vector<int> removed;
  Density best{edges_left, size_left};
  long long best_prefix = 0;

  auto guard = [&] {
    for (int c = 0; c < g.color_count(); ++c)
      if (d.k[c] >= 1 && counts[c] <= d.k[c]) return false;
    return true;
  };
  while (size_left > 1 && guard()) {
    auto it = queue.begin();
    int v = it->second;
    queue.erase(it);
    alive[v] = 0;
    edges_left -= deg[v];
    --size_left;
    counts[g.color_of[v]]--;
    removed.push_back(v);
    for (int w : g.adjacency[v]) {
      if (!alive[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
    Density dnow{edges_left, size_left};
    if (dnow > best) {
      best = dnow;
      best_prefix = static_cast<long long>(removed.size());
    }
  }
  std::vector<int> members;
  std::vector<char> cut(g.n(), 0);
  for (long long i = 0; i < best_prefix; ++i) cut[removed[i]] = 1;
  for (int v = 0; v < g.n(); ++v)
    if (!cut[v]) members.push_back(v);
  return make_subset(g, members);
}

// Baseline: the at-least-k LP route with k = |k|_1, then the demand
// completion. 1/4-approximation.
inline Subset dalvks_prop2(const ColoredGraph& g, const DemandVector& d,
                           SolveStats* stats = nullptr) {
  validate_demand(g, d);
  Subset s = dalks_lp(g, d.l1(), stats);
  return make_it_feasible(g, s, d);
}

// Accelerated variant: the denser of the peeling output and the enumeration
// restricted to p vectors with p_c = k_c for some demanded color. Ties go to
// the peeling branch. 1/3-approximation.
inline Subset dalvks_accel(const ColoredGraph& g, const DemandVector& d,
                           SolveStats* stats = nullptr) {
  validate_demand(g, d);
  Subset peel = dalvks_peel(g, d);
  DalvksOptions opts;
  opts.pin_some_coordinate = true;
  Subset lp = dalvks_lp_full(g, d, opts, stats);
  return density(g, lp) > density(g, peel) ? lp : peel;
}

}  // namespace ddsg
