#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ddsg/dalvks.hpp"
#include "ddsg/generate.hpp"
#include "ddsg/oracle.hpp"

namespace ddsg {

// Minimal RFC-4180 table. The first record carries the schema version, then
// the header record, then data rows.
struct CsvTable {
  std::string schema;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_escape(const std::string& field) {
  bool quote = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!quote) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_csv(const CsvTable& t, std::ostream& os) {
  os << "schema," << csv_escape(t.schema) << "\r\n";
  for (size_t i = 0; i < t.header.size(); ++i)
    os << (i ? "," : "") << csv_escape(t.header[i]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_escape(row[i]);
    os << "\r\n";
  }
}

namespace bench_detail {

inline std::string fmt_double(double v) {
  char buf[64];
  snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline Frac median(std::vector<Frac> values) {
  if (values.empty()) throw InputError("median of an empty sample");
  std::sort(values.begin(), values.end());
  size_t k = values.size() / 2;
  if (values.size() % 2 == 1) return values[k];
  Frac sum = values[k - 1] + values[k];
  return (sum * Frac(1, 2)).reduced();
}

}  // namespace bench_detail

struct RatioSuiteOptions {
  int instance_count = 100;
  int n_min = 8;
  int n_max = 14;  // must stay within the brute-force oracle cap
  std::uint64_t seed = 1;
  bool planted = false;  // planted two-cluster instances instead of ER
};

struct RatioSuiteOutcome {
  CsvTable table;
  std::vector<Frac> accel_ratios;
  std::vector<Frac> prop2_ratios;
  std::vector<long long> accel_lp_counts;
  std::vector<long long> full_lp_counts;
};

// Two-color instances with k_c = floor(|V_c|/2); every instance is solved by
// the exact oracle, the accelerated algorithm, the single-LP baseline and
// the full enumeration, and the per-instance ratios are tabulated with a
// min/median summary. Oracle failures are recorded per row, not fatal.
inline RatioSuiteOutcome run_ratio_suite(const RatioSuiteOptions& opts) {
  RatioSuiteOutcome out;
  out.table.schema = std::string("ddsg.bench.") +
                     (opts.planted ? "amazonlike" : "ratio") + ".v1";
  out.table.header = {"instance", "n",           "m",
                      "seed",     "opt",         "accel_density",
                      "prop2_density", "accel_ratio", "prop2_ratio",
                      "accel_lp_solves", "full_lp_solves", "status"};
  const double probs[] = {0.3, 0.4, 0.5, 0.6};
  for (int i = 0; i < opts.instance_count; ++i) {
    GenSpec spec;
    spec.seed = opts.seed + static_cast<std::uint64_t>(i);
    int span = opts.n_max - opts.n_min + 1;
    int n = opts.n_min + static_cast<int>(spec.seed % span);
    ColoredGraph g;
    if (opts.planted) {
      spec.kind = GenSpec::Kind::PlantedClusters;
      spec.cluster_sizes = {n / 2, n - n / 2};
      spec.p_intra = {0.7, probs[i % 4]};
      spec.p_inter = 0.15;
      spec.color_mode = PerCluster{};
      g = gen_planted(spec);
    } else {
      spec.kind = GenSpec::Kind::ErdosRenyi;
      spec.n = n;
      spec.edge_prob = probs[i % 4];
      spec.color_mode = EvenSplit{2};
      g = gen_er(spec);
    }
    DemandVector d;
    for (int c = 0; c < g.color_count(); ++c)
      d.k.push_back(static_cast<long long>(g.color_classes[c].size()) / 2);
    std::vector<std::string> row(out.table.header.size(), "");
    row[0] = std::to_string(i);
    row[1] = std::to_string(g.n());
    row[2] = std::to_string(g.m());
    row[3] = std::to_string(spec.seed);
    try {
      OracleResult oracle = brute_force_dalvks(g, d);
      if (oracle.status != OracleStatus::Optimal)
        throw InfeasibleError("oracle found no feasible subset");
      SolveStats accel_stats, full_stats, prop2_stats;
      Subset accel = dalvks_accel(g, d, &accel_stats);
      Subset full = dalvks_lp_full(g, d, {}, &full_stats);
      Subset prop2 = dalvks_prop2(g, d, &prop2_stats);
      (void)full;
      Frac opt = oracle.optimum.reduced();
      Frac ra = (density(g, accel) / opt).reduced();
      Frac rp = (density(g, prop2) / opt).reduced();
      row[4] = opt.str();
      row[5] = density(g, accel).reduced().str();
      row[6] = density(g, prop2).reduced().str();
      row[7] = bench_detail::fmt_double(ra.value());
      row[8] = bench_detail::fmt_double(rp.value());
      row[9] = std::to_string(accel_stats.lp_solves);
      row[10] = std::to_string(full_stats.lp_solves);
      row[11] = "ok";
      out.accel_ratios.push_back(ra);
      out.prop2_ratios.push_back(rp);
      out.accel_lp_counts.push_back(accel_stats.lp_solves);
      out.full_lp_counts.push_back(full_stats.lp_solves);
    } catch (const std::exception& e) {
      row[11] = std::string("error: ") + e.what();
    }
    out.table.rows.push_back(std::move(row));
  }
  if (!out.accel_ratios.empty()) {
    auto min_of = [](const std::vector<Frac>& v) {
      return *std::min_element(v.begin(), v.end());
    };
    std::vector<std::string> mins(out.table.header.size(), "");
    mins[0] = "summary_min";
    mins[7] = bench_detail::fmt_double(min_of(out.accel_ratios).value());
    mins[8] = bench_detail::fmt_double(min_of(out.prop2_ratios).value());
    out.table.rows.push_back(mins);
    std::vector<std::string> med(out.table.header.size(), "");
    med[0] = "summary_median";
    med[7] = bench_detail::fmt_double(
        bench_detail::median(out.accel_ratios).value());
    med[8] = bench_detail::fmt_double(
        bench_detail::median(out.prop2_ratios).value());
    out.table.rows.push_back(med);
  }
  return out;
}

struct AppendixCOptions {
  std::vector<int> n_values = {18, 54, 90, 126};
  std::vector<int> color_counts = {2, 3, 6};
  int seeds = 10;
};

struct AppendixCCell {
  int n = 0;
  int colors = 0;
  std::uint64_t seed = 0;
  long long lp_solves = 0;
  Frac accel_density{0, 1};
  double runtime_ms = 0.0;
  std::string status;
};

struct AppendixCOutcome {
  CsvTable table;
  std::vector<AppendixCCell> cells;
};

// The sparse random-graph grid: p = 5/n, nodes evenly split into colors,
// k_c = floor(n/(2|C|)), several seeds per cell. Records the accelerated
// algorithm's relaxation count and runtime; wall-clock numbers are reported,
// never asserted.
inline AppendixCOutcome run_appendixC_suite(const AppendixCOptions& opts) {
  AppendixCOutcome out;
  out.table.schema = "ddsg.bench.appendixC.v1";
  out.table.header = {"n",        "colors",     "seed",      "k_c",
                      "m",        "density",    "lp_solves", "runtime_ms",
                      "status"};
  for (int n : opts.n_values) {
    for (int nc : opts.color_counts) {
      for (int s = 0; s < opts.seeds; ++s) {
        GenSpec spec;
        spec.kind = GenSpec::Kind::ErdosRenyi;
        spec.n = n;
        spec.edge_prob = 5.0 / n;
        spec.color_mode = EvenSplit{nc};
        spec.seed = 1000 + static_cast<std::uint64_t>(s);
        ColoredGraph g = gen_er(spec);
        long long kc = n / (2LL * nc);
        DemandVector d{std::vector<long long>(g.color_count(), kc)};
        AppendixCCell cell;
        cell.n = n;
        cell.colors = nc;
        cell.seed = spec.seed;
        std::vector<std::string> row(out.table.header.size(), "");
        row[0] = std::to_string(n);
        row[1] = std::to_string(nc);
        row[2] = std::to_string(spec.seed);
        row[3] = std::to_string(kc);
        row[4] = std::to_string(g.m());
        try {
          SolveStats stats;
          auto t0 = std::chrono::steady_clock::now();
          Subset best = dalvks_accel(g, d, &stats);
          auto t1 = std::chrono::steady_clock::now();
          cell.lp_solves = stats.lp_solves;
          cell.accel_density = density(g, best).reduced();
          cell.runtime_ms =
              std::chrono::duration<double, std::milli>(t1 - t0).count();
          cell.status = "ok";
          row[5] = cell.accel_density.str();
          row[6] = std::to_string(cell.lp_solves);
          row[7] = bench_detail::fmt_double(cell.runtime_ms);
          row[8] = "ok";
        } catch (const std::exception& e) {
          cell.status = std::string("error: ") + e.what();
          row[8] = cell.status;
        }
        out.cells.push_back(cell);
        out.table.rows.push_back(std::move(row));
      }
    }
  }
  return out;
}

}  // namespace ddsg
