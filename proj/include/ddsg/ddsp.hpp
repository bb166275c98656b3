#pragma once

#include <optional>
#include <vector>

#include "ddsg/dense_lp.hpp"
#include "ddsg/graph.hpp"
#include "ddsg/peeling.hpp"

namespace ddsg {

enum class GammaSolver { DalksLP, DalksPeel };  // gamma = 1/2 resp. 1/3

struct DdspParams {
  Frac alpha{1, 1};  // dominance bound, in [1/|C|, 1]
  std::optional<GammaSolver> gamma;  // unset: choose by lp_node_threshold
  // Above this node count the peeling route is used instead of the LP
  // route. The bundled exact LP backend is comfortable only at desk scale;
  // raise the threshold when a high-performance backend is registered.
  int lp_node_threshold = 64;
};

inline GammaSolver resolve_gamma(const DdspParams& params, int n) {
  if (params.gamma) return *params.gamma;
  return n <= params.lp_node_threshold ? GammaSolver::DalksLP
                                       : GammaSolver::DalksPeel;
}

namespace ddsp_detail {

// Incremental view of a growing/shrinking subset.
struct SubsetState {
  std::vector<char> in_s;
  std::vector<long long> color_counts;
  std::vector<long long> deg_in;  // edges into the set, for all nodes
  long long size = 0;
  long long edge_count = 0;
  long long c_max = 0;

  SubsetState(const ColoredGraph& g, const Subset& s)
      : in_s(g.n(), 0), color_counts(g.color_count(), 0), deg_in(g.n(), 0) {
    for (int v : s.members) in_s[v] = 1;
    size = s.size();
    edge_count = s.edge_count;
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.adjacency[v])
        if (in_s[w]) deg_in[v]++;
    for (int v : s.members) color_counts[g.color_of[v]]++;
    for (long long c : color_counts) c_max = std::max(c_max, c);
  }

  void add(const ColoredGraph& g, int v) {
    in_s[v] = 1;
    ++size;
    edge_count += deg_in[v];
    long long& cc = color_counts[g.color_of[v]];
    ++cc;
    c_max = std::max(c_max, cc);
    for (int w : g.adjacency[v]) deg_in[w]++;
  }

  void remove(const ColoredGraph& g, int v) {
    in_s[v] = 0;
    --size;
    edge_count -= deg_in[v];
    color_counts[g.color_of[v]]--;
    c_max = 0;
    for (long long c : color_counts) c_max = std::max(c_max, c);
    for (int w : g.adjacency[v]) deg_in[w]--;
  }

  // alpha(S) <= bound, by cross-multiplication
  bool within(const Frac& bound) const {
    return c_max * bound.den <= bound.num * size;
  }

  Subset snapshot(const ColoredGraph& g) const {
    std::vector<int> members;
    for (int v = 0; v < g.n(); ++v)
      if (in_s[v]) members.push_back(v);
    return make_subset(g, members);
  }
};

// One Diversify step: a color of the lowest participation among colors that
// still have nodes outside S (ties by color id), then the candidate with the
// most edges into S, then the smallest id. Returns -1 when V is exhausted.
inline int pick_addition(const ColoredGraph& g, const SubsetState& st) {
  int best_color = -1;
  for (int c = 0; c < g.color_count(); ++c) {
    bool available =
        static_cast<long long>(g.color_classes[c].size()) > st.color_counts[c];
    if (!available) continue;
    if (best_color < 0 || st.color_counts[c] < st.color_counts[best_color])
      best_color = c;
  }
  if (best_color < 0) return -1;
  int pick = -1;
  for (int v : g.color_classes[best_color]) {
    if (st.in_s[v]) continue;
    if (pick < 0 || st.deg_in[v] > st.deg_in[pick]) pick = v;
  }
  return pick;
}

}  // namespace ddsp_detail

// Grows s one node at a time, always from a least-represented color, until
// alpha(S) <= alpha. Never removes nodes. Throws InfeasibleExtension when V
// runs out first (cannot happen when alpha(V) <= alpha).
inline Subset diversify(const ColoredGraph& g, const Subset& s,
                        const Frac& alpha) {
  if (s.members.empty()) throw InputError("diversify of the empty set");
  ddsp_detail::SubsetState st(g, s);
  while (!st.within(alpha)) {
    int v = ddsp_detail::pick_addition(g, st);
    if (v < 0)
      throw InfeasibleExtension(
          "no diverse superset exists: alpha(V) = " + graph_alpha(g).str() +
          " > " + alpha.str());
    st.add(g, v);
  }
  return st.snapshot(g);
}

// Removes, from the currently dominant color class, the member with the
// fewest edges inside the set, until alpha(S) <= alpha. Returns the first
// feasible set along the trajectory, or nothing when the peel bottoms out.
inline std::optional<Subset> ddsp_fallback_peel(const ColoredGraph& g,
                                                const Subset& s,
                                                const Frac& alpha) {
  if (s.members.empty()) throw InputError("fallback peel of the empty set");
  ddsp_detail::SubsetState st(g, s);
  if (st.within(alpha))
    throw InputError("fallback peel requires alpha(S) > alpha");
  while (st.size > 0) {
    if (st.within(alpha)) return st.snapshot(g);
    int live_colors = 0;
    for (long long c : st.color_counts)
      if (c > 0) ++live_colors;
    if (live_colors <= 1) return std::nullopt;  // monochromatic, alpha(S) = 1
    int dom = -1;
    for (int c = 0; c < g.color_count(); ++c)
      if (dom < 0 || st.color_counts[c] > st.color_counts[dom]) dom = c;
    int pick = -1;
    for (int v : g.color_classes[dom]) {
      if (!st.in_s[v]) continue;
      if (pick < 0 || st.deg_in[v] < st.deg_in[pick]) pick = v;
    }
    st.remove(g, pick);
  }
  return std::nullopt;
}

struct DdspResult {
  bool feasible = false;
  Subset subset;          // valid when feasible
  bool used_fallback = false;
};

// The two-step approximation: a gamma-approximate at-least-k solution with
// k = ceil(1/alpha), then Diversify. When the whole node set is not diverse
// the procedure cannot terminate, so the grown set (all of V) is handed to
// the fallback peel instead.
inline DdspResult ddsp_approx(const ColoredGraph& g, const DdspParams& params,
                              SolveStats* stats = nullptr) {
  if (g.n() == 0) throw InputError("empty graph");
  const Frac& alpha = params.alpha;
  if (alpha < Frac(1, g.color_count()) || alpha > Frac(1, 1))
    throw InputError("alpha must lie in [1/|C|, 1]; got " + alpha.str() +
                     " with |C| = " + std::to_string(g.color_count()));
  long long k = ceil_inverse(alpha);
  GammaSolver gamma = resolve_gamma(params, g.n());
  Subset seed = gamma == GammaSolver::DalksLP ? dalks_lp(g, k, stats)
                                              : dalks_peel(g, k);
  DdspResult out;
  if (graph_alpha(g) <= alpha) {
    out.feasible = true;
    out.subset = diversify(g, seed, alpha);
    return out;
  }
  // alpha(V) > alpha: Diversify would exhaust V; peel V down instead.
  out.used_fallback = true;
  Subset whole;
  {
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    whole = make_subset(g, all);
  }
  auto fb = ddsp_fallback_peel(g, whole, alpha);
  if (fb) {
    out.feasible = true;
    out.subset = std::move(*fb);
  }
  return out;
}

enum class ReductionKind { DalkS, DamkS };

// Instances showing that the dominance-constrained problem subsumes the
// at-least-k and at-most-k problems: distinct colors with alpha = 1/k, or a
// single color plus k isolated fresh-colored dummies with alpha = 1/2.
inline std::pair<ColoredGraph, Frac> reduction_instance(ReductionKind kind,
                                                        long long k,
                                                        const ColoredGraph& g) {
  if (k < 1) throw InputError("reduction needs k >= 1");
  if (kind == ReductionKind::DalkS) {
    std::vector<std::string> colors;
    for (int v = 0; v < g.n(); ++v) colors.push_back("u" + std::to_string(v));
    return {build_graph(g.n(), g.edges, colors), Frac(1, k)};
  }
  std::vector<std::string> colors(g.n(), "real");
  for (long long i = 0; i < k; ++i) colors.push_back("dummy");
  return {build_graph(g.n() + static_cast<int>(k), g.edges, colors),
          Frac(1, 2)};
}

}  // namespace ddsg
