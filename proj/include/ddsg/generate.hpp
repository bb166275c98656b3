#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ddsg/graph.hpp"

namespace ddsg {

// Color assignment schemes for generated graphs.
struct EvenSplit {
  int colors = 2;
};
struct PerCluster {};
struct UniformRandom {
  int colors = 2;
};
using ColorMode = std::variant<EvenSplit, PerCluster, UniformRandom>;

struct GenSpec {
  enum class Kind { ErdosRenyi, PlantedClusters };
  Kind kind = Kind::ErdosRenyi;
  int n = 0;                        // ErdosRenyi
  double edge_prob = 0.0;           // ErdosRenyi
  std::vector<int> cluster_sizes;   // PlantedClusters
  std::vector<double> p_intra;      // one per cluster
  double p_inter = 0.0;
  ColorMode color_mode = EvenSplit{2};
  std::uint64_t seed = 0;
};

namespace gen_detail {

// Counter-based generator: every decision is a pure function of
// (seed, stream, counter), so edge draws are order-independent and a spec
// reproduces the identical graph on any run.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t counter) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1) +
                    0xbf58476d1ce4e5b9ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t counter) {
  return static_cast<double>(mix(seed, stream, counter) >> 11) * 0x1.0p-53;
}

constexpr std::uint64_t kEdgeStream = 1;
constexpr std::uint64_t kColorStream = 2;

inline std::vector<std::string> color_labels(const GenSpec& spec, int n,
                                             const std::vector<int>& cluster) {
  std::vector<std::string> labels(n);
  if (std::holds_alternative<EvenSplit>(spec.color_mode)) {
    int k = std::get<EvenSplit>(spec.color_mode).colors;
    if (k < 1 || k > n) throw InputError("even split needs 1 <= colors <= n");
    for (int v = 0; v < n; ++v)
      labels[v] = "c" + std::to_string(static_cast<long long>(v) * k / n);
  } else if (std::holds_alternative<PerCluster>(spec.color_mode)) {
    if (cluster.empty())
      throw InputError("per-cluster colors need a clustered generator");
    for (int v = 0; v < n; ++v)
      labels[v] = "c" + std::to_string(cluster[v]);
  } else {
    int k = std::get<UniformRandom>(spec.color_mode).colors;
    if (k < 1) throw InputError("uniform colors need colors >= 1");
    for (int v = 0; v < n; ++v)
      labels[v] =
          "c" + std::to_string(mix(spec.seed, kColorStream, v) % k);
  }
  return labels;
}

}  // namespace gen_detail

// Every unordered pair drawn independently with probability p; node i takes
// color floor(i*|C|/n) under EvenSplit.
inline ColoredGraph gen_er(const GenSpec& spec) {
  if (spec.kind != GenSpec::Kind::ErdosRenyi)
    throw InputError("gen_er called with a non-ER spec");
  if (spec.n < 1) throw InputError("n must be >= 1");
  if (spec.edge_prob < 0.0 || spec.edge_prob > 1.0)
    throw InputError("edge probability outside [0, 1]");
  const int n = spec.n;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t idx =
          static_cast<std::uint64_t>(u) * n + static_cast<std::uint64_t>(v);
      if (gen_detail::uniform01(spec.seed, gen_detail::kEdgeStream, idx) <
          spec.edge_prob)
        edges.push_back({u, v});
    }
  return build_graph(n, std::move(edges),
                     gen_detail::color_labels(spec, n, {}));
}

// Planted clusters: per-cluster intra-edge probabilities and a single
// inter-cluster probability. PerCluster gives each cluster its own color.
inline ColoredGraph gen_planted(const GenSpec& spec) {
  if (spec.kind != GenSpec::Kind::PlantedClusters)
    throw InputError("gen_planted called with a non-planted spec");
  if (spec.cluster_sizes.empty())
    throw InputError("planted generator needs cluster sizes");
  if (spec.p_intra.size() != spec.cluster_sizes.size())
    throw InputError("need one intra probability per cluster");
  for (double p : spec.p_intra)
    if (p < 0.0 || p > 1.0) throw InputError("intra probability outside [0, 1]");
  if (spec.p_inter < 0.0 || spec.p_inter > 1.0)
    throw InputError("inter probability outside [0, 1]");
  int n = 0;
  for (int s : spec.cluster_sizes) {
    if (s < 1) throw InputError("cluster sizes must be >= 1");
    n += s;
  }
  std::vector<int> cluster(n);
  {
    int v = 0;
    for (size_t c = 0; c < spec.cluster_sizes.size(); ++c)
      for (int i = 0; i < spec.cluster_sizes[c]; ++i) cluster[v++] = c;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double p = cluster[u] == cluster[v] ? spec.p_intra[cluster[u]]
                                          : spec.p_inter;
      std::uint64_t idx =
          static_cast<std::uint64_t>(u) * n + static_cast<std::uint64_t>(v);
      if (gen_detail::uniform01(spec.seed, gen_detail::kEdgeStream, idx) < p)
        edges.push_back({u, v});
    }
  return build_graph(n, std::move(edges),
                     gen_detail::color_labels(spec, n, cluster));
}

inline ColoredGraph generate(const GenSpec& spec) {
  return spec.kind == GenSpec::Kind::ErdosRenyi ? gen_er(spec)
                                                : gen_planted(spec);
}

}  // namespace ddsg
