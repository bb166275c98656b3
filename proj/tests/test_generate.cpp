#include <filesystem>

#include <catch2/catch_amalgamated.hpp>

#include "ddsg/generate.hpp"
#include "ddsg/graph.hpp"
#include "ddsg/io.hpp"
#include "ddsg/peeling.hpp"
#include "test_support.hpp"

using namespace ddsg;

TEST_CASE("identical specs give identical graphs") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::ErdosRenyi;
  spec.n = 18;
  spec.edge_prob = 5.0 / 18.0;
  spec.color_mode = EvenSplit{2};
  spec.seed = 1;
  auto a = gen_er(spec);
  auto b = gen_er(spec);
  CHECK(a.edges == b.edges);
  CHECK(a.color_of == b.color_of);
  GenSpec other = spec;
  other.seed = 2;
  CHECK(gen_er(other).edges != a.edges);
}

TEST_CASE("edge probability extremes") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::ErdosRenyi;
  spec.n = 9;
  spec.edge_prob = 0.0;
  spec.color_mode = EvenSplit{3};
  spec.seed = 7;
  CHECK(gen_er(spec).m() == 0);
  spec.edge_prob = 1.0;
  CHECK(gen_er(spec).m() == 9 * 8 / 2);
  spec.edge_prob = 1.5;
  CHECK_THROWS_AS(gen_er(spec), InputError);
}

TEST_CASE("even split assigns floor(i*k/n)") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::ErdosRenyi;
  spec.n = 10;
  spec.edge_prob = 0.2;
  spec.color_mode = EvenSplit{3};
  spec.seed = 3;
  auto g = gen_er(spec);
  for (int v = 0; v < 10; ++v)
    CHECK(g.color_labels[g.color_of[v]] ==
          "c" + std::to_string(v * 3 / 10));
  CHECK(g.color_count() == 3);
}

TEST_CASE("uniform colors stay within range and reshuffle with the seed") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::ErdosRenyi;
  spec.n = 40;
  spec.edge_prob = 0.1;
  spec.color_mode = UniformRandom{4};
  spec.seed = 11;
  auto g = gen_er(spec);
  CHECK(g.color_count() <= 4);
  GenSpec other = spec;
  other.seed = 12;
  CHECK(gen_er(other).color_of != g.color_of);
}

TEST_CASE("planted clusters") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::PlantedClusters;
  spec.cluster_sizes = {5};
  spec.p_intra = {1.0};
  spec.p_inter = 0.0;
  spec.color_mode = PerCluster{};
  spec.seed = 5;
  auto g = gen_planted(spec);
  CHECK(g.m() == 10);  // a complete cluster
  CHECK(g.color_count() == 1);

  spec.cluster_sizes = {4, 4};
  spec.p_intra = {1.0, 1.0};
  auto g2 = gen_planted(spec);
  CHECK(g2.color_count() == 2);
  CHECK(g2.m() == 12);  // two complete clusters, no cross edges
  for (int v = 0; v < 4; ++v) CHECK(g2.color_of[v] == 0);
  for (int v = 4; v < 8; ++v) CHECK(g2.color_of[v] == 1);

  spec.p_intra = {1.0};
  CHECK_THROWS_AS(gen_planted(spec), InputError);
}

TEST_CASE("edge counts concentrate around the expectation") {
  const int n = 54;
  const double p = 5.0 / n;
  double expect = p * n * (n - 1) / 2.0;
  double total = 0;
  for (int s = 0; s < 50; ++s) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::ErdosRenyi;
    spec.n = n;
    spec.edge_prob = p;
    spec.color_mode = EvenSplit{2};
    spec.seed = 100 + s;
    total += gen_er(spec).m();
  }
  double mean = total / 50.0;
  CHECK(std::abs(mean - expect) <= 0.10 * expect);
}

TEST_CASE("the hot planted cluster is the densest subgraph") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::PlantedClusters;
  spec.cluster_sizes = {40, 40, 40, 40, 40};
  spec.p_intra = {0.8, 0.2, 0.2, 0.2, 0.2};
  spec.p_inter = 0.02;
  spec.color_mode = PerCluster{};
  spec.seed = 1;
  auto g = gen_planted(spec);
  Subset s = greedy_plus_plus(g, 5);
  auto stats = diversity_stats(g, s);
  CHECK(stats.alpha == Frac(1, 1));  // monochromatic
  for (int v : s.members) CHECK(v < 40);  // inside the hot cluster
}

TEST_CASE("generated instances round-trip through the file formats") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ddsg_gen_io";
  fs::create_directories(dir);
  GenSpec spec;
  spec.kind = GenSpec::Kind::ErdosRenyi;
  spec.n = 18;
  spec.edge_prob = 5.0 / 18;
  spec.color_mode = EvenSplit{3};
  spec.seed = 9;
  auto g = gen_er(spec);
  write_instance(g, (dir / "er.graph").string(), (dir / "er.colors").string());
  auto back = read_instance((dir / "er.graph").string(),
                            (dir / "er.colors").string());
  CHECK(back.edges == g.edges);
  CHECK(back.color_of == g.color_of);
}
