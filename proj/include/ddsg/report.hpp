#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ddsg/dense_lp.hpp"
#include "ddsg/graph.hpp"
#include "ddsg/peeling.hpp"

namespace ddsg {

using ordered_json = nlohmann::ordered_json;

// Machine-readable record of one solve: the problem, the algorithm, the
// graph's headline statistics, the parameters, and the result with exact
// fractions alongside floats. Serializes with a stable key order and
// round-trips losslessly.
struct SolveReport {
  std::string problem;    // dsp | ddsp | dalks | dalvks
  std::string algorithm;  // e.g. peel, gpp, exact, lp, accel, prop2, ...
  long long n = 0;
  long long m = 0;
  int colors = 0;
  Frac alpha_of_graph{0, 1};
  ordered_json params = ordered_json::object();
  std::string status;  // feasible | infeasible
  std::optional<Subset> result;
  Frac result_density{0, 1};
  Frac normalized_density{0, 1};
  std::string normalized_basis;  // dsp_exact | greedy_plus_plus
  Frac alpha_of_result{0, 1};
  std::vector<std::pair<std::string, long long>> result_color_counts;
  long long lp_solve_count = 0;
  double runtime_ms = 0.0;
};

namespace report_detail {

inline ordered_json frac_json(const Frac& f) {
  ordered_json j = ordered_json::object();
  j["frac"] = f.str();
  j["float"] = f.value();
  return j;
}

inline Frac frac_from(const ordered_json& j) {
  return Frac::parse(j.at("frac").get<std::string>());
}

}  // namespace report_detail

inline ordered_json report_to_json(const SolveReport& r) {
  ordered_json j = ordered_json::object();
  j["schema"] = "ddsg.report.v1";
  j["problem"] = r.problem;
  j["algorithm"] = r.algorithm;
  ordered_json graph = ordered_json::object();
  graph["n"] = r.n;
  graph["m"] = r.m;
  graph["colors"] = r.colors;
  graph["alpha_of_graph"] = report_detail::frac_json(r.alpha_of_graph);
  j["graph"] = graph;
  j["params"] = r.params;
  j["status"] = r.status;
  if (r.result) {
    ordered_json res = ordered_json::object();
    res["members"] = r.result->members;
    res["size"] = r.result->size();
    res["edge_count"] = r.result->edge_count;
    res["density"] = report_detail::frac_json(r.result_density);
    ordered_json nd = report_detail::frac_json(r.normalized_density);
    nd["basis"] = r.normalized_basis;
    res["normalized_density"] = nd;
    res["alpha_of_result"] = report_detail::frac_json(r.alpha_of_result);
    ordered_json cc = ordered_json::object();
    for (const auto& [label, count] : r.result_color_counts) cc[label] = count;
    res["color_counts"] = cc;
    j["result"] = res;
  } else {
    j["result"] = nullptr;
  }
  j["lp_solve_count"] = r.lp_solve_count;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline SolveReport report_from_json(const ordered_json& j) {
  if (j.at("schema").get<std::string>() != "ddsg.report.v1")
    throw InputError("unknown report schema");
  SolveReport r;
  r.problem = j.at("problem").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  const auto& graph = j.at("graph");
  r.n = graph.at("n").get<long long>();
  r.m = graph.at("m").get<long long>();
  r.colors = graph.at("colors").get<int>();
  r.alpha_of_graph = report_detail::frac_from(graph.at("alpha_of_graph"));
  r.params = j.at("params");
  r.status = j.at("status").get<std::string>();
  if (!j.at("result").is_null()) {
    const auto& res = j.at("result");
    Subset s;
    s.members = res.at("members").get<std::vector<int>>();
    s.edge_count = res.at("edge_count").get<long long>();
    r.result = s;
    r.result_density = report_detail::frac_from(res.at("density"));
    r.normalized_density =
        report_detail::frac_from(res.at("normalized_density"));
    r.normalized_basis =
        res.at("normalized_density").at("basis").get<std::string>();
    r.alpha_of_result = report_detail::frac_from(res.at("alpha_of_result"));
    for (const auto& [label, count] :
         res.at("color_counts").items())
      r.result_color_counts.push_back({label, count.get<long long>()});
  }
  r.lp_solve_count = j.at("lp_solve_count").get<long long>();
  r.runtime_ms = j.at("runtime_ms").get<double>();
  return r;
}

inline std::string render_report(const SolveReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

// Density of the reference unconstrained solution used to normalize reported
// densities: the exact LP route at desk scale, iterated peeling beyond it.
inline std::pair<Frac, std::string> normalization_basis(
    const ColoredGraph& g, int lp_node_threshold, SolveStats* stats = nullptr) {
  if (g.n() <= lp_node_threshold) {
    Subset s = dsp_exact(g, stats);
    return {density(g, s), "dsp_exact"};
  }
  Subset s = greedy_plus_plus(g, 5);
  return {density(g, s), "greedy_plus_plus"};
}

// Fills the result block of a report from a solved subset.
inline void fill_result(SolveReport& r, const ColoredGraph& g, const Subset& s,
                        const Frac& basis_density,
                        const std::string& basis_name) {
  r.status = "feasible";
  r.result = s;
  r.result_density = density(g, s);
  r.normalized_basis = basis_name;
  r.normalized_density = basis_density.num == 0
                             ? Frac(0, 1)
                             : (r.result_density / basis_density).reduced();
  r.alpha_of_result = diversity_stats(g, s).alpha;
  for (int c = 0; c < g.color_count(); ++c)
    r.result_color_counts.push_back(
        {g.color_labels[c], s.color_counts[c]});
}

}  // namespace ddsg
