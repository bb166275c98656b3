// Acceptance suite: one pass/fail line per criterion, hard failures drive
// the exit code. Criteria marked soft print warnings instead of failing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddsg/ddsg.hpp"

#include "../test_support.hpp"

using namespace ddsg;
using testsup::Rng;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int criterion, bool pass, bool soft, const std::string& detail,
            double secs) {
  const char* tag = pass ? "PASS" : (soft ? "WARN" : "FAIL");
  if (!pass && !soft) ++g_failures;
  std::printf("[%s] criterion %2d: %s (%.1fs)\n", tag, criterion,
              detail.c_str(), secs);
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// Shared 300-instance oracle suite: n <= 12, |C| <= 3, random demands.
// ---------------------------------------------------------------------------

struct SuiteInstance {
  ColoredGraph g;
  DemandVector d;
  Frac opt;              // brute-force optimum, reduced
  bool slack_optimal;    // some optimal subset has slack in every demand
  Frac milp;
  Frac full_pruned, full_plain, accel, prop2, peel;
  long long full_lp_count = 0, accel_lp_count = 0;
};

std::vector<SuiteInstance> build_oracle_suite(int count) {
  std::vector<SuiteInstance> out;
  Rng rng(20240501);
  while (static_cast<int>(out.size()) < count) {
    SuiteInstance inst{testsup::random_graph(rng, 2, 12, 3), {}, Frac(0, 1),
                       false, Frac(0, 1), Frac(0, 1), Frac(0, 1), Frac(0, 1),
                       Frac(0, 1), Frac(0, 1)};
    inst.d = testsup::random_demand(rng, inst.g);
    const ColoredGraph& g = inst.g;
    auto bf = brute_force_dalvks(g, inst.d);
    if (bf.status != OracleStatus::Optimal) continue;  // cannot happen
    inst.opt = bf.optimum.reduced();

    // does any optimal subset keep strict slack in every demanded color?
    for (unsigned long long mask = 1;
         mask < (1ULL << g.n()) && !inst.slack_optimal; ++mask) {
      long long size = 0, edges = 0;
      std::vector<long long> counts(g.color_count(), 0);
      for (int v = 0; v < g.n(); ++v)
        if (mask >> v & 1) {
          ++size;
          ++counts[g.color_of[v]];
        }
      bool feasible = true;
      for (int c = 0; c < g.color_count(); ++c)
        if (counts[c] < inst.d.k[c]) feasible = false;
      if (!feasible) continue;
      for (const auto& [u, v] : g.edges)
        if ((mask >> u & 1) && (mask >> v & 1)) ++edges;
      if (Frac(edges, size) != inst.opt) continue;
      bool slack = true;
      for (int c = 0; c < g.color_count(); ++c)
        if (inst.d.k[c] >= 1 && counts[c] <= inst.d.k[c]) slack = false;
      inst.slack_optimal = slack;
    }

    inst.milp = milp_dalvks(g, inst.d).optimum.reduced();

    SolveStats full_stats, accel_stats;
    inst.full_pruned =
        density(g, dalvks_lp_full(g, inst.d, {}, &full_stats)).reduced();
    DalvksOptions no_prune;
    no_prune.prune = false;
    inst.full_plain =
        density(g, dalvks_lp_full(g, inst.d, no_prune, nullptr)).reduced();
    inst.accel = density(g, dalvks_accel(g, inst.d, &accel_stats)).reduced();
    inst.prop2 = density(g, dalvks_prop2(g, inst.d, nullptr)).reduced();
    inst.peel = density(g, dalvks_peel(g, inst.d)).reduced();
    inst.full_lp_count = full_stats.lp_solves;
    inst.accel_lp_count = accel_stats.lp_solves;
    out.push_back(std::move(inst));
  }
  return out;
}

void criterion_1(const std::vector<SuiteInstance>& suite, double build_secs) {
  Timer t;
  int mismatches = 0;
  for (const auto& inst : suite)
    if (inst.milp != inst.opt) ++mismatches;
  bool pass = mismatches == 0;
  double total = build_secs;
  std::string detail = "integer-program oracle matches enumeration on " +
                       std::to_string(suite.size()) + " instances, " +
                       std::to_string(mismatches) + " mismatches";
  if (total > 300.0) detail += " [runtime above the 5-minute target]";
  report(1, pass, false, detail, total + t.seconds());
}

void criterion_2() {
  Timer t;
  Rng rng(777);
  int checked = 0, violations = 0;
  while (checked < 200) {
    ColoredGraph g = testsup::random_graph(rng, 2, 12, 3);
    const Frac choices[] = {Frac(1, g.color_count()), Frac(1, 2), Frac(2, 3),
                            Frac(1, 1)};
    Frac alpha = choices[rng.below(4)];
    if (alpha < Frac(1, g.color_count())) continue;
    if (graph_alpha(g) > alpha) continue;
    auto oracle = brute_force_ddsp(g, alpha);
    if (oracle.status != OracleStatus::Optimal) continue;
    long long k = ceil_inverse(alpha);
    Frac factor = std::max(Frac(1, k), Frac(alpha.den, alpha.num * g.n()));
    for (auto [gamma, gfrac] :
         {std::pair<GammaSolver, Frac>{GammaSolver::DalksLP, Frac(1, 2)},
          {GammaSolver::DalksPeel, Frac(1, 3)}}) {
      DdspParams p;
      p.alpha = alpha;
      p.gamma = gamma;
      auto res = ddsp_approx(g, p);
      if (!res.feasible || diversity_stats(g, res.subset).alpha > alpha ||
          density(g, res.subset) < gfrac * factor * oracle.optimum.reduced())
        ++violations;
    }
    ++checked;
  }
  report(2, violations == 0, false,
         "two-step approximation holds its floor on 200 instances for both "
         "subroutines, " +
             std::to_string(violations) + " violations",
         t.seconds());
}

void criterion_3() {
  Timer t;
  Rng rng(888);
  int checked = 0, violations = 0;
  while (checked < 200) {
    ColoredGraph g = testsup::random_graph(rng, 3, 12, 4);
    long long pnum = 1 + static_cast<long long>(rng.below(3));
    long long pden = pnum + static_cast<long long>(rng.below(3));
    Frac alpha(pnum, pden);
    if (alpha < Frac(1, g.color_count()) || graph_alpha(g) > alpha) continue;
    long long k = ceil_inverse(alpha);
    Subset s = testsup::random_nonempty_subset(rng, g);
    if (s.size() < k) continue;
    Subset grown = diversify(g, s, alpha);
    bool ok = diversity_stats(g, grown).c_max == diversity_stats(g, s).c_max;
    Frac bound = std::min(Frac(k, 1), Frac(g.n(), 1) * alpha);
    ok = ok && Frac(grown.size(), 1) <= bound * Frac(s.size(), 1);
    ok = ok && std::includes(grown.members.begin(), grown.members.end(),
                             s.members.begin(), s.members.end());
    if (!ok) ++violations;
    ++checked;
  }
  report(3, violations == 0, false,
         "guided completion preserves the top color count and the size bound "
         "on 200 instances, " +
             std::to_string(violations) + " violations",
         t.seconds());
}

void criterion_4() {
  Timer t;
  Rng rng(999);
  int checked = 0, violations = 0;
  while (checked < 200) {
    ColoredGraph g = testsup::random_graph(rng, 2, 12, 3);
    Subset s = testsup::random_nonempty_subset(rng, g);
    auto sol = solve_lp(build_lp_p(g, PVector{s.color_counts}));
    if (sol.status != LpStatus::Optimal ||
        cmp(sol.objective_value, rat_of(density(g, s))) < 0)
      ++violations;
    ++checked;
  }
  report(4, violations == 0, false,
         "relaxation value dominates every subset with matching color "
         "masses, 200 instances, " +
             std::to_string(violations) + " violations",
         t.seconds());
}

void criterion_5(const std::vector<SuiteInstance>& suite) {
  Timer t;
  int violations = 0;
  for (const auto& inst : suite) {
    if (inst.full_pruned * Frac(3, 1) < inst.opt) ++violations;
    if (inst.accel * Frac(3, 1) < inst.opt) ++violations;
    if (inst.prop2 * Frac(4, 1) < inst.opt) ++violations;
  }
  report(5, violations == 0, false,
         "1/3 floors for the enumeration routes and the 1/4 baseline floor "
         "hold on the oracle suite, " +
             std::to_string(violations) + " violations",
         t.seconds());
}

void criterion_6(const std::vector<SuiteInstance>& suite) {
  Timer t;
  int eligible = 0, violations = 0;
  for (const auto& inst : suite) {
    if (!inst.slack_optimal) continue;
    ++eligible;
    if (inst.peel * Frac(2, 1) < inst.opt) ++violations;
  }
  report(6, violations == 0, false,
         "peeling reaches 1/2 on the " + std::to_string(eligible) +
             " instances whose optimum has slack everywhere, " +
             std::to_string(violations) + " violations",
         t.seconds());
}

void criterion_7() {
  Timer t;
  RatioSuiteOptions opts;
  opts.instance_count = 100;
  opts.n_min = 8;
  opts.n_max = 14;
  opts.seed = 42;
  auto out = run_ratio_suite(opts);
  int hard_violations = 0;
  for (size_t i = 0; i < out.accel_ratios.size(); ++i) {
    if (out.accel_ratios[i] * Frac(3, 1) < Frac(1, 1)) ++hard_violations;
    if (out.prop2_ratios[i] * Frac(4, 1) < Frac(1, 1)) ++hard_violations;
  }
  Frac median = bench_detail::median(out.accel_ratios);
  Frac min_prop2 =
      *std::min_element(out.prop2_ratios.begin(), out.prop2_ratios.end());
  bool soft_ok = median >= Frac(19, 20) && min_prop2 >= Frac(4, 5);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "empirical ratios on 100 instances: accel median %.4f "
                "(target 0.95), baseline min %.4f (target 0.8)",
                median.value(), min_prop2.value());
  // the thresholds are soft; the hard 1/3 and 1/4 floors are not
  if (hard_violations > 0)
    report(7, false, false,
           std::string(buf) + ", " + std::to_string(hard_violations) +
               " hard floor violations",
           t.seconds());
  else
    report(7, soft_ok, true, buf, t.seconds());
}

void criterion_8(const std::vector<SuiteInstance>& suite) {
  Timer t;
  int density_mismatches = 0, count_violations = 0;
  for (const auto& inst : suite) {
    if (inst.full_pruned != inst.full_plain) ++density_mismatches;
    if (inst.accel_lp_count > inst.full_lp_count) ++count_violations;
  }
  report(8, density_mismatches == 0 && count_violations == 0, false,
         "value pruning preserves every density (" +
             std::to_string(density_mismatches) +
             " mismatches) and the restricted enumeration never solves more "
             "relaxations (" +
             std::to_string(count_violations) + " violations)",
         t.seconds());
}

void criterion_9() {
  Timer t;
  int mono = 0, diverse_ok = 0;
  const int seeds = 10;
  for (int s = 1; s <= seeds; ++s) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::PlantedClusters;
    spec.cluster_sizes = {40, 40, 40, 40, 40};
    spec.p_intra = {0.8, 0.2, 0.2, 0.2, 0.2};
    spec.p_inter = 0.02;
    spec.color_mode = PerCluster{};
    spec.seed = static_cast<std::uint64_t>(s);
    ColoredGraph g = gen_planted(spec);
    Subset dense = greedy_plus_plus(g, 5);
    if (diversity_stats(g, dense).alpha == Frac(1, 1)) ++mono;
    DdspParams p;
    p.alpha = Frac(1, 5);
    auto res = ddsp_approx(g, p);
    if (res.feasible &&
        diversity_stats(g, res.subset).alpha == Frac(1, 5))
      ++diverse_ok;
  }
  report(9, mono >= 9 && diverse_ok == seeds, false,
         "planted clusters: densest subgraph monochromatic on " +
             std::to_string(mono) + "/10 seeds, constrained solve fully "
             "balanced on " +
             std::to_string(diverse_ok) + "/10",
         t.seconds());
}

void criterion_10() {
  Timer t;
  Rng rng(1234);
  int checked = 0, violations = 0;
  std::vector<ColoredGraph> graphs = {fixtures::t3(), fixtures::k4b(),
                                      fixtures::two_triangles(),
                                      fixtures::p4()};
  for (int i = 0; i < 8; ++i) graphs.push_back(testsup::random_graph(rng, 4, 10, 1));
  for (const auto& g : graphs) {
    for (long long k : {1LL, 2LL, 3LL}) {
      if (k > g.n()) continue;
      auto [gd, ad] = reduction_instance(ReductionKind::DalkS, k, g);
      if (brute_force_ddsp(gd, ad).optimum != *testsup::brute_dalks(g, k))
        ++violations;
      auto [gm, am] = reduction_instance(ReductionKind::DamkS, k, g);
      // feasible sets pair real nodes with an equal number of dummies, so
      // the constructed optimum is exactly half the at-most-k optimum
      if (brute_force_ddsp(gm, am).optimum !=
          *testsup::brute_damks(g, k) * Frac(1, 2))
        ++violations;
      ++checked;
    }
  }
  report(10, violations == 0, false,
         "reduction instances agree with the at-least-k optimum and half the "
         "at-most-k optimum on " +
             std::to_string(checked) + " cases, " +
             std::to_string(violations) + " violations",
         t.seconds());
}

}  // namespace

int main() {
  std::printf("acceptance suite (exact rational backend: %s)\n",
              active_lp_backend().name().c_str());
  Timer total;

  Timer suite_timer;
  auto suite = build_oracle_suite(300);
  double build_secs = suite_timer.seconds();

  criterion_1(suite, build_secs);
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5(suite);
  criterion_6(suite);
  criterion_7();
  criterion_8(suite);
  criterion_9();
  criterion_10();

  std::printf("%d hard failure(s), total %.1fs\n", g_failures,
              total.seconds());
  return g_failures == 0 ? 0 : 1;
}
