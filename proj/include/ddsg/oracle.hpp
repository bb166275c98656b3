#pragma once

#include <optional>
#include <vector>

#include "ddsg/dalvks.hpp"
#include "ddsg/graph.hpp"
#include "ddsg/lp.hpp"

namespace ddsg {

enum class OracleMethod { BruteForce, Milp };
enum class OracleStatus { Optimal, Infeasible };

struct OracleResult {
  OracleStatus status = OracleStatus::Infeasible;
  Density optimum{0, 1};
  Subset witness;  // valid when Optimal; its density equals optimum
  OracleMethod method = OracleMethod::BruteForce;
};

namespace oracle_detail {

constexpr int kBruteForceCap = 25;

// Shared subset-enumeration scaffolding: adjacency bitmasks and popcount
// edge counting keep the 2^n scan cheap.
struct MaskScan {
  int n;
  std::vector<unsigned long long> adj_mask;
  std::vector<int> color_of;

  explicit MaskScan(const ColoredGraph& g) : n(g.n()), color_of(g.color_of) {
    if (n > kBruteForceCap)
      throw InputError("brute force capped at " +
                       std::to_string(kBruteForceCap) + " nodes, got " +
                       std::to_string(n));
    adj_mask.assign(n, 0);
    for (const auto& [u, v] : g.edges) {
      adj_mask[u] |= 1ULL << v;
      adj_mask[v] |= 1ULL << u;
    }
  }

  long long edge_count(unsigned long long mask) const {
    long long e = 0;
    for (unsigned long long rest = mask; rest;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      e += __builtin_popcountll(adj_mask[v] & mask);
    }
    return e / 2;
  }
};

inline std::vector<int> mask_members(unsigned long long mask) {
  std::vector<int> ids;
  for (unsigned long long rest = mask; rest;) {
    ids.push_back(__builtin_ctzll(rest));
    rest &= rest - 1;
  }
  return ids;
}

// Lexicographically-smallest-member-sequence tie break over equal densities.
inline bool lex_smaller(const std::vector<int>& a, const std::vector<int>& b) {
  return a < b;
}

}  // namespace oracle_detail

// Enumerates every nonempty subset, keeps the densest one whose dominance
// ratio is within alpha. Ties resolve to the lexicographically smallest
// member sequence. Enforced cap: 25 nodes.
inline OracleResult brute_force_ddsp(const ColoredGraph& g, const Frac& alpha,
                                     SolveStats* = nullptr) {
  oracle_detail::MaskScan scan(g);
  const int nc = g.color_count();
  OracleResult out;
  out.method = OracleMethod::BruteForce;
  std::optional<Density> best;
  std::vector<int> best_members;
  std::vector<long long> counts(nc);
  for (unsigned long long mask = 1; mask < (1ULL << g.n()); ++mask) {
    std::fill(counts.begin(), counts.end(), 0);
    long long size = 0, c_max = 0;
    for (unsigned long long rest = mask; rest;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      ++size;
      c_max = std::max(c_max, ++counts[scan.color_of[v]]);
    }
    if (c_max * alpha.den > alpha.num * size) continue;  // alpha(S) > alpha
    Density d{scan.edge_count(mask), size};
    if (!best || d > *best) {
      best = d;
      best_members = oracle_detail::mask_members(mask);
    } else if (d == *best) {
      auto members = oracle_detail::mask_members(mask);
      if (oracle_detail::lex_smaller(members, best_members))
        best_members = std::move(members);
    }
  }
  if (!best) return out;  // Infeasible
  out.status = OracleStatus::Optimal;
  out.witness = make_subset(g, best_members);
  out.optimum = *best;
  return out;
}

// Enumerates every nonempty subset, keeps the densest one meeting every
// per-color demand. Enforced cap: 25 nodes.
inline OracleResult brute_force_dalvks(const ColoredGraph& g,
                                       const DemandVector& d,
                                       SolveStats* = nullptr) {
  if (static_cast<int>(d.k.size()) != g.color_count())
    throw InputError("demand vector size does not match the color count");
  oracle_detail::MaskScan scan(g);
  const int nc = g.color_count();
  OracleResult out;
  out.method = OracleMethod::BruteForce;
  std::optional<Density> best;
  std::vector<int> best_members;
  std::vector<long long> counts(nc);
  for (unsigned long long mask = 1; mask < (1ULL << g.n()); ++mask) {
    std::fill(counts.begin(), counts.end(), 0);
    long long size = 0;
    for (unsigned long long rest = mask; rest;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      ++size;
      ++counts[scan.color_of[v]];
    }
    bool ok = true;
    for (int c = 0; c < nc && ok; ++c) ok = counts[c] >= d.k[c];
    if (!ok) continue;
    Density dd{scan.edge_count(mask), size};
    if (!best || dd > *best) {
      best = dd;
      best_members = oracle_detail::mask_members(mask);
    } else if (dd == *best) {
      auto members = oracle_detail::mask_members(mask);
      if (oracle_detail::lex_smaller(members, best_members))
        best_members = std::move(members);
    }
  }
  if (!best) return out;
  out.status = OracleStatus::Optimal;
  out.witness = make_subset(g, best_members);
  out.optimum = *best;
  return out;
}

struct MilpOracleOptions {
  long long node_limit = 2'000'000;
  // Seed the search with a cheap feasible solution so later size guesses
  // prune at the root. The seed subset is re-verified here, so a bad
  // heuristic can only cost time, never correctness.
  bool seed_with_peel = true;
};

// The size-guessing integer program: for every k_guess from |k|_1 to n,
// maximize sum x_e / k_guess with sum y = k_guess, per-color sums >= k_c,
// x_e <= y at both endpoints, x relaxed to [0,1], y binary. Best over all
// guesses is the exact optimum.
inline OracleResult milp_dalvks(const ColoredGraph& g, const DemandVector& d,
                                MilpOracleOptions opts = {},
                                SolveStats* stats = nullptr) {
  validate_demand(g, d);
  OracleResult out;
  out.method = OracleMethod::Milp;

  std::optional<Density> best;
  Subset best_witness;
  auto consider = [&](const Subset& s) {
    if (!subset_meets_demand(s, d)) return;
    Density cd{s.edge_count, s.size()};
    if (!best || cd > *best) {
      best = cd;
      best_witness = s;
    }
  };
  if (opts.seed_with_peel) consider(dalvks_peel(g, d));

  const long long mm = g.m();
  for (long long kg = std::max(d.l1(), 1LL); kg <= g.n(); ++kg) {
    LpModel m;
    for (long long e = 0; e < mm; ++e)
      m.add_var(rat_of(1, kg), 0, Rat(1));
    for (int v = 0; v < g.n(); ++v) m.add_var(Rat(0), 0, Rat(1), true);
    auto yvar = [&](int v) { return static_cast<int>(mm) + v; };
    std::vector<std::pair<int, Rat>> total;
    for (int v = 0; v < g.n(); ++v) total.push_back({yvar(v), Rat(1)});
    m.add_row(total, Rel::Eq, rat_of(kg));
    for (int c = 0; c < g.color_count(); ++c) {
      std::vector<std::pair<int, Rat>> row;
      for (int v : g.color_classes[c]) row.push_back({yvar(v), Rat(1)});
      m.add_row(row, Rel::Ge, rat_of(d.k[c]));
    }
    for (long long e = 0; e < mm; ++e) {
      const auto& [u, v] = g.edges[e];
      m.add_row({{static_cast<int>(e), Rat(1)}, {yvar(u), Rat(-1)}}, Rel::Le,
                0);
      m.add_row({{static_cast<int>(e), Rat(1)}, {yvar(v), Rat(-1)}}, Rel::Le,
                0);
    }
    MilpOptions mo;
    mo.node_limit = opts.node_limit;
    if (best) mo.cutoff = rat_of(*best);
    LpSolution sol;
    try {
      sol = solve_milp(m, mo, stats);
    } catch (const ResourceExhausted& e) {
      throw ResourceExhausted(std::string(e.what()) + " at size guess " +
                              std::to_string(kg));
    }
    if (sol.status != LpStatus::Optimal) continue;  // nothing beat the cutoff
    std::vector<int> ids;
    for (int v = 0; v < g.n(); ++v)
      if (cmp(sol.primal[yvar(v)], Rat(1)) == 0) ids.push_back(v);
    consider(make_subset(g, ids));
  }
  if (!best) return out;  // unreachable for validated demands
  out.status = OracleStatus::Optimal;
  out.optimum = *best;
  out.witness = best_witness;
  return out;
}

}  // namespace ddsg
