// Command-line front end: solve subcommands (dsp, ddsp, dalks, dalvks),
// instance generation and the benchmark suites. Solve subcommands read a
// graph (+ colors) and print one report as structured text with a stable
// key order.
//
// Exit codes: 0 ok, 1 usage, 2 input validation, 3 infeasible instance,
// 4 solver resource failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ddsg/ddsg.hpp"

namespace {

using namespace ddsg;

struct IoOptions {
  std::string graph_path;
  std::string colors_path;
  std::string out_path;
  std::string dump_lp_dir;
  int lp_threshold = 64;
};

void add_io_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--graph", io.graph_path,
                  "edge list file ('u v' lines, or combined TSV with @color "
                  "directives)")
      ->required();
  cmd->add_option("--colors", io.colors_path,
                  "color file ('node label' lines); omit for combined input");
  cmd->add_option("--out", io.out_path, "write the report here instead of stdout");
  cmd->add_option("--dump-lp", io.dump_lp_dir,
                  "dump every solved model into this directory");
  cmd->add_option("--lp-threshold", io.lp_threshold,
                  "largest node count solved through the exact LP backend");
}

ColoredGraph load(const IoOptions& io) {
  if (!io.dump_lp_dir.empty()) lp_dump_dir() = io.dump_lp_dir;
  return read_instance(io.graph_path, io.colors_path.empty()
                                          ? std::nullopt
                                          : std::optional(io.colors_path));
}

void emit(const SolveReport& report, const IoOptions& io) {
  std::string text = render_report(report);
  if (io.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(io.out_path);
    if (!os) throw InputError("cannot write '" + io.out_path + "'");
    os << text;
  }
}

SolveReport base_report(const ColoredGraph& g, const std::string& problem,
                        const std::string& algorithm) {
  SolveReport r;
  r.problem = problem;
  r.algorithm = algorithm;
  r.n = g.n();
  r.m = g.m();
  r.colors = g.color_count();
  r.alpha_of_graph = graph_alpha(g);
  return r;
}

DemandVector parse_demand(const ColoredGraph& g, const std::string& text) {
  DemandVector d{std::vector<long long>(g.color_count(), 0)};
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw InputError("demand entry '" + tok + "' is not label=count");
    std::string label = tok.substr(0, eq);
    long long count = 0;
    try {
      count = std::stoll(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("demand count in '" + tok + "' is not an integer");
    }
    int color = -1;
    for (int c = 0; c < g.color_count(); ++c)
      if (g.color_labels[c] == label) color = c;
    if (color < 0)
      throw InputError("demand names unknown color '" + label + "'");
    d.k[color] = count;
  }
  return d;
}

double parse_prob(const std::string& text) {
  if (text.find('/') != std::string::npos) return Frac::parse(text).value();
  size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size())
    throw InputError("bad probability '" + text + "'");
  if (v < 0.0 || v > 1.0) throw InputError("probability outside [0, 1]");
  return v;
}

// Defence in depth: re-derive the returned subset from the graph and check
// the constraint the solver claims to satisfy before printing anything.
void verify_dominance(const ColoredGraph& g, const Subset& s,
                      const Frac& alpha) {
  Subset fresh = make_subset(g, s.members);
  if (fresh.edge_count != s.edge_count)
    throw SolverError("result edge count does not recount");
  if (!(diversity_stats(g, fresh).alpha <= alpha))
    throw SolverError("result violates the dominance bound");
}

void verify_demand(const ColoredGraph& g, const Subset& s,
                   const DemandVector& d) {
  Subset fresh = make_subset(g, s.members);
  if (fresh.edge_count != s.edge_count)
    throw SolverError("result edge count does not recount");
  if (!subset_meets_demand(fresh, d))
    throw SolverError("result violates a color demand");
}

int run_dsp(const IoOptions& io, const std::string& algo, int iters) {
  ColoredGraph g = load(io);
  SolveStats stats;
  auto t0 = std::chrono::steady_clock::now();
  Subset s = algo == "peel"  ? dsp_peel(g)
             : algo == "gpp" ? greedy_plus_plus(g, iters)
                             : dsp_exact(g, &stats);
  auto [basis, basis_name] = normalization_basis(g, io.lp_threshold, &stats);
  auto t1 = std::chrono::steady_clock::now();
  SolveReport r = base_report(g, "dsp", algo);
  r.params["algo"] = algo;
  if (algo == "gpp") r.params["iterations"] = iters;
  fill_result(r, g, s, basis, basis_name);
  r.lp_solve_count = stats.lp_solves;
  r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  emit(r, io);
  return 0;
}

int run_ddsp(const IoOptions& io, const std::string& alpha_text,
             const std::string& gamma) {
  ColoredGraph g = load(io);
  DdspParams params;
  params.alpha = Frac::parse(alpha_text);
  params.lp_node_threshold = io.lp_threshold;
  if (gamma == "lp") params.gamma = GammaSolver::DalksLP;
  if (gamma == "peel") params.gamma = GammaSolver::DalksPeel;
  SolveStats stats;
  auto t0 = std::chrono::steady_clock::now();
  DdspResult res = ddsp_approx(g, params, &stats);
  std::optional<std::pair<Frac, std::string>> basis;
  if (res.feasible)
    basis = normalization_basis(g, io.lp_threshold, &stats);
  auto t1 = std::chrono::steady_clock::now();
  std::string gamma_name =
      resolve_gamma(params, g.n()) == GammaSolver::DalksLP ? "lp" : "peel";
  SolveReport r = base_report(g, "ddsp", "approx:" + gamma_name);
  r.params["alpha"] = params.alpha.str();
  r.params["gamma"] = gamma_name;
  r.params["fallback"] = res.used_fallback;
  r.lp_solve_count = stats.lp_solves;
  r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (!res.feasible) {
    r.status = "infeasible";
    emit(r, io);
    return 3;
  }
  verify_dominance(g, res.subset, params.alpha);
  fill_result(r, g, res.subset, basis->first, basis->second);
  emit(r, io);
  return 0;
}

int run_dalks(const IoOptions& io, long long k, const std::string& algo) {
  ColoredGraph g = load(io);
  SolveStats stats;
  auto t0 = std::chrono::steady_clock::now();
  Subset s = algo == "peel" ? dalks_peel(g, k) : dalks_lp(g, k, &stats);
  auto [basis, basis_name] = normalization_basis(g, io.lp_threshold, &stats);
  auto t1 = std::chrono::steady_clock::now();
  if (s.size() < k) throw SolverError("result smaller than k");
  SolveReport r = base_report(g, "dalks", algo);
  r.params["k"] = k;
  r.params["algo"] = algo;
  fill_result(r, g, s, basis, basis_name);
  r.lp_solve_count = stats.lp_solves;
  r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  emit(r, io);
  return 0;
}

int run_dalvks(const IoOptions& io, const std::string& demand_text,
               const std::string& algo) {
  ColoredGraph g = load(io);
  DemandVector d = parse_demand(g, demand_text);
  validate_demand(g, d);
  SolveStats stats;
  auto t0 = std::chrono::steady_clock::now();
  Subset s;
  if (algo == "lp")
    s = dalvks_lp_full(g, d, {}, &stats);
  else if (algo == "peel")
    s = dalvks_peel(g, d);
  else if (algo == "accel")
    s = dalvks_accel(g, d, &stats);
  else if (algo == "prop2")
    s = dalvks_prop2(g, d, &stats);
  else if (algo == "milp")
    s = milp_dalvks(g, d, {}, &stats).witness;
  else
    s = brute_force_dalvks(g, d).witness;
  auto [basis, basis_name] = normalization_basis(g, io.lp_threshold, &stats);
  auto t1 = std::chrono::steady_clock::now();
  verify_demand(g, s, d);
  SolveReport r = base_report(g, "dalvks", algo);
  ordered_json dm = ordered_json::object();
  for (int c = 0; c < g.color_count(); ++c) dm[g.color_labels[c]] = d.k[c];
  r.params["demand"] = dm;
  r.params["algo"] = algo;
  fill_result(r, g, s, basis, basis_name);
  r.lp_solve_count = stats.lp_solves;
  r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  emit(r, io);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diversity-constrained densest subgraph toolkit"};
  app.require_subcommand(1);

  IoOptions io_dsp, io_ddsp, io_dalks, io_dalvks;

  auto* dsp = app.add_subcommand("dsp", "unconstrained densest subgraph");
  std::string dsp_algo = "gpp";
  int dsp_iters = 5;
  add_io_options(dsp, io_dsp);
  dsp->add_option("--algo", dsp_algo, "peel | gpp | exact")
      ->check(CLI::IsMember({"peel", "gpp", "exact"}));
  dsp->add_option("--iters", dsp_iters, "iterations for gpp")
      ->check(CLI::PositiveNumber);

  auto* ddsp = app.add_subcommand(
      "ddsp", "densest subgraph with a dominance bound per color");
  std::string alpha_text, gamma = "auto";
  add_io_options(ddsp, io_ddsp);
  ddsp->add_option("--alpha", alpha_text,
                   "dominance bound as an exact fraction P/Q")
      ->required();
  ddsp->add_option("--gamma", gamma, "at-least-k subroutine: lp | peel | auto")
      ->check(CLI::IsMember({"lp", "peel", "auto"}));

  auto* dalks = app.add_subcommand("dalks", "densest subgraph of size >= k");
  long long dalks_k = 1;
  std::string dalks_algo = "lp";
  add_io_options(dalks, io_dalks);
  dalks->add_option("--k", dalks_k, "minimum size")->required();
  dalks->add_option("--algo", dalks_algo, "peel | lp")
      ->check(CLI::IsMember({"peel", "lp"}));

  auto* dalvks = app.add_subcommand(
      "dalvks", "densest subgraph with per-color lower bounds");
  std::string demand_text, dalvks_algo = "accel";
  add_io_options(dalvks, io_dalvks);
  dalvks->add_option("--demand", demand_text, "label=count,label=count,...")
      ->required();
  dalvks->add_option("--algo", dalvks_algo,
                     "lp | peel | accel | prop2 | milp | brute")
      ->check(CLI::IsMember({"lp", "peel", "accel", "prop2", "milp", "brute"}));

  auto* gen = app.add_subcommand("gen", "generate synthetic instances");
  gen->require_subcommand(1);
  std::string gen_graph_out, gen_colors_out, gen_color_mode = "even";
  std::string gen_p_text = "1/2";
  int gen_n = 18, gen_colors_n = 2;
  std::uint64_t gen_seed = 1;
  auto* gen_er_cmd = gen->add_subcommand("er", "uniform random graph");
  gen_er_cmd->add_option("--n", gen_n, "nodes")->required();
  gen_er_cmd->add_option("--p", gen_p_text, "edge probability (fraction or decimal)");
  gen_er_cmd->add_option("--colors", gen_colors_n, "number of colors");
  gen_er_cmd->add_option("--color-mode", gen_color_mode, "even | uniform")
      ->check(CLI::IsMember({"even", "uniform"}));
  gen_er_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_er_cmd->add_option("--graph-out", gen_graph_out, "edge list output")
      ->required();
  gen_er_cmd->add_option("--colors-out", gen_colors_out, "color file output")
      ->required();

  auto* gen_pl = gen->add_subcommand("planted", "planted-cluster graph");
  std::string pl_sizes = "40,40,40,40,40", pl_intra = "0.8,0.2,0.2,0.2,0.2";
  std::string pl_inter = "0.02", pl_mode = "percluster";
  int pl_colors = 5;
  gen_pl->add_option("--cluster-sizes", pl_sizes, "comma list of sizes");
  gen_pl->add_option("--p-intra", pl_intra, "comma list, one per cluster");
  gen_pl->add_option("--p-inter", pl_inter, "cross-cluster probability");
  gen_pl->add_option("--color-mode", pl_mode, "percluster | uniform")
      ->check(CLI::IsMember({"percluster", "uniform"}));
  gen_pl->add_option("--colors", pl_colors, "colors for uniform mode");
  gen_pl->add_option("--seed", gen_seed, "generator seed");
  gen_pl->add_option("--graph-out", gen_graph_out, "edge list output")
      ->required();
  gen_pl->add_option("--colors-out", gen_colors_out, "color file output")
      ->required();

  auto* bench = app.add_subcommand("bench", "benchmark suites (CSV output)");
  std::string suite, bench_out;
  int bench_count = 100, bench_seeds = 10, bench_nmin = 8, bench_nmax = 14;
  std::uint64_t bench_seed = 1;
  std::vector<int> bench_ns = {18};
  std::vector<int> bench_cs = {2, 3, 6};
  bench->add_option("--suite", suite, "appendixC | ratio | amazonlike")
      ->required()
      ->check(CLI::IsMember({"appendixC", "ratio", "amazonlike"}));
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  bench->add_option("--count", bench_count, "ratio/amazonlike instances");
  bench->add_option("--n-min", bench_nmin, "ratio/amazonlike smallest n");
  bench->add_option("--n-max", bench_nmax, "ratio/amazonlike largest n");
  bench->add_option("--seed", bench_seed, "ratio/amazonlike base seed");
  bench->add_option("--seeds", bench_seeds, "appendixC seeds per cell");
  bench
      ->add_option("--n-values", bench_ns,
                   "appendixC node counts (the full grid 18 54 90 126 takes "
                   "hours on the bundled exact backend)")
      ->delimiter(',');
  bench->add_option("--color-counts", bench_cs, "appendixC color counts")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (dsp->parsed()) return run_dsp(io_dsp, dsp_algo, dsp_iters);
    if (ddsp->parsed()) return run_ddsp(io_ddsp, alpha_text, gamma);
    if (dalks->parsed()) return run_dalks(io_dalks, dalks_k, dalks_algo);
    if (dalvks->parsed()) return run_dalvks(io_dalvks, demand_text, dalvks_algo);
    if (gen->parsed()) {
      GenSpec spec;
      spec.seed = gen_seed;
      ColoredGraph g;
      if (gen_er_cmd->parsed()) {
        spec.kind = GenSpec::Kind::ErdosRenyi;
        spec.n = gen_n;
        spec.edge_prob = parse_prob(gen_p_text);
        if (gen_color_mode == "even")
          spec.color_mode = EvenSplit{gen_colors_n};
        else
          spec.color_mode = UniformRandom{gen_colors_n};
        g = gen_er(spec);
      } else {
        spec.kind = GenSpec::Kind::PlantedClusters;
        std::istringstream ss(pl_sizes);
        std::string tok;
        while (std::getline(ss, tok, ','))
          spec.cluster_sizes.push_back(std::stoi(tok));
        std::istringstream ps(pl_intra);
        while (std::getline(ps, tok, ','))
          spec.p_intra.push_back(parse_prob(tok));
        spec.p_inter = parse_prob(pl_inter);
        if (pl_mode == "percluster")
          spec.color_mode = PerCluster{};
        else
          spec.color_mode = UniformRandom{pl_colors};
        g = gen_planted(spec);
      }
      write_instance(g, gen_graph_out, gen_colors_out);
      std::cerr << "wrote n=" << g.n() << " m=" << g.m() << " |C|="
                << g.color_count() << " to " << gen_graph_out << " / "
                << gen_colors_out << "\n";
      return 0;
    }
    if (bench->parsed()) {
      CsvTable table;
      if (suite == "ratio" || suite == "amazonlike") {
        RatioSuiteOptions opts;
        opts.instance_count = bench_count;
        opts.n_min = bench_nmin;
        opts.n_max = bench_nmax;
        opts.seed = bench_seed;
        opts.planted = suite == "amazonlike";
        table = run_ratio_suite(opts).table;
      } else {
        AppendixCOptions opts;
        opts.n_values = bench_ns;
        opts.color_counts = bench_cs;
        opts.seeds = bench_seeds;
        table = run_appendixC_suite(opts).table;
      }
      if (bench_out.empty()) {
        write_csv(table, std::cout);
      } else {
        std::ofstream os(bench_out, std::ios::binary);
        if (!os) throw InputError("cannot write '" + bench_out + "'");
        write_csv(table, os);
      }
      return 0;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceExhausted& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
