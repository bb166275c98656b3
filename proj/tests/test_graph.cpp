#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "ddsg/fixtures.hpp"
#include "ddsg/graph.hpp"
#include "ddsg/io.hpp"
#include "test_support.hpp"

using namespace ddsg;

TEST_CASE("fixtures have the documented shape") {
  auto t3 = fixtures::t3();
  CHECK(t3.n() == 3);
  CHECK(t3.m() == 3);
  CHECK(t3.color_count() == 1);

  auto k4b = fixtures::k4b();
  CHECK(k4b.n() == 4);
  CHECK(k4b.m() == 6);
  CHECK(k4b.color_count() == 2);

  auto tt = fixtures::two_triangles();
  CHECK(tt.n() == 6);
  CHECK(tt.m() == 6);
  CHECK(tt.color_count() == 2);

  auto k5p = fixtures::k5p();
  CHECK(k5p.n() == 6);
  CHECK(k5p.m() == 11);
  CHECK(k5p.color_count() == 2);
  CHECK(k5p.color_classes[0].size() == 5);

  auto p4 = fixtures::p4();
  CHECK(p4.n() == 4);
  CHECK(p4.m() == 3);
  CHECK(p4.color_count() == 2);
}

TEST_CASE("construction validates the input") {
  CHECK_THROWS_WITH(build_graph(3, {{0, 0}}, {"a", "a", "a"}),
                    Catch::Matchers::ContainsSubstring("self-loop"));
  CHECK_THROWS_WITH(build_graph(3, {{0, 5}}, {"a", "a", "a"}),
                    Catch::Matchers::ContainsSubstring("endpoint"));
  CHECK_THROWS_WITH(build_graph(3, {{0, 1}, {0, 1}}, {"a", "a", "a"}),
                    Catch::Matchers::ContainsSubstring("duplicate edge"));
  // a reversed pair is the same undirected edge
  CHECK_THROWS_WITH(build_graph(3, {{0, 1}, {1, 0}}, {"a", "a", "a"}),
                    Catch::Matchers::ContainsSubstring("duplicate edge"));
  CHECK_THROWS_AS(build_graph(2, {}, {"a"}), InputError);
}

TEST_CASE("color ids follow first appearance") {
  auto g = build_graph(4, {}, {"x", "y", "x", "z"});
  CHECK(g.color_labels == std::vector<std::string>{"x", "y", "z"});
  CHECK(g.color_of == std::vector<int>{0, 1, 0, 2});
  CHECK(g.color_classes[0] == std::vector<int>{0, 2});
}

TEST_CASE("density on the fixtures") {
  auto t3 = fixtures::t3();
  auto k4b = fixtures::k4b();
  Subset all_t3 = make_subset(t3, {0, 1, 2});
  CHECK(density(t3, all_t3) == Frac(1, 1));
  CHECK(density(t3, all_t3).num == 3);
  CHECK(density(t3, all_t3).den == 3);
  Subset all_k4 = make_subset(k4b, {0, 1, 2, 3});
  CHECK(density(k4b, all_k4) == Frac(3, 2));
  Subset pair = make_subset(k4b, {0, 3});
  CHECK(density(k4b, pair) == Frac(1, 2));
  CHECK_THROWS_AS(make_subset(k4b, {}), InputError);
}

TEST_CASE("diversity statistics on the fixtures") {
  auto k4b = fixtures::k4b();
  auto st = diversity_stats(k4b, make_subset(k4b, {0, 1, 2, 3}));
  CHECK(st.c_max == 2);
  CHECK(st.alpha == Frac(1, 2));

  auto t3 = fixtures::t3();
  CHECK(diversity_stats(t3, make_subset(t3, {0, 1, 2})).alpha == Frac(1, 1));

  auto k5p = fixtures::k5p();
  auto st5 = diversity_stats(k5p, make_subset(k5p, {0, 1, 2, 3, 4, 5}));
  CHECK(st5.c_max == 5);
  CHECK(st5.alpha == Frac(5, 6));
  CHECK(graph_alpha(k5p) == Frac(5, 6));
}

TEST_CASE("subset caches agree with a direct rescan") {
  testsup::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto g = testsup::random_graph(rng, 2, 16, 4);
    Subset s = testsup::random_nonempty_subset(rng, g);
    long long recount = 0;
    for (const auto& [u, v] : g.edges) {
      bool bu = std::binary_search(s.members.begin(), s.members.end(), u);
      bool bv = std::binary_search(s.members.begin(), s.members.end(), v);
      if (bu && bv) ++recount;
    }
    REQUIRE(density(g, s).num == recount);
    auto st = diversity_stats(g, s);
    // alpha * |S| = c_max, cross-multiplied
    REQUIRE(st.alpha.num * s.size() == st.c_max * st.alpha.den);
    long long total = 0;
    for (long long c : s.color_counts) total += c;
    REQUIRE(total == s.size());
  }
}

TEST_CASE("subset member validation") {
  auto g = fixtures::t3();
  CHECK_THROWS_AS(make_subset(g, {0, 0}), InputError);
  CHECK_THROWS_AS(make_subset(g, {3}), InputError);
  CHECK_THROWS_AS(make_subset(g, {-1}), InputError);
}

TEST_CASE("two-file round trip") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ddsg_graph_io";
  fs::create_directories(dir);
  auto g = fixtures::k5p();
  write_instance(g, (dir / "g.graph").string(), (dir / "g.colors").string());
  auto back = read_instance((dir / "g.graph").string(),
                            (dir / "g.colors").string());
  CHECK(back.n() == g.n());
  CHECK(back.edges == g.edges);
  CHECK(back.color_of == g.color_of);
  CHECK(back.color_labels == g.color_labels);
}

TEST_CASE("combined layout is auto-detected") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ddsg_graph_io";
  fs::create_directories(dir);
  auto path = (dir / "combined.tsv").string();
  {
    std::ofstream os(path);
    os << "# tiny instance\n";
    os << "0\t1\n1\t2\n";
    os << "@color 0 red\n@color 1 blue\n@color 2 red\n";
  }
  auto g = read_instance(path, std::nullopt);
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.color_labels == std::vector<std::string>{"red", "blue"});

  auto plain = (dir / "plain.graph").string();
  {
    std::ofstream os(plain);
    os << "0 1\n";
  }
  CHECK_THROWS_WITH(read_instance(plain, std::nullopt),
                    Catch::Matchers::ContainsSubstring("@color"));
}

TEST_CASE("parse diagnostics carry the offending line") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ddsg_graph_io";
  fs::create_directories(dir);
  auto path = (dir / "bad.graph").string();
  {
    std::ofstream os(path);
    os << "0 1\nnonsense here extra\n";
  }
  CHECK_THROWS_WITH(read_edge_list(path),
                    Catch::Matchers::ContainsSubstring(":2"));

  auto cpath = (dir / "bad.colors").string();
  {
    std::ofstream os(cpath);
    os << "0 a\n0 b\n";
  }
  CHECK_THROWS_WITH(read_color_list(cpath),
                    Catch::Matchers::ContainsSubstring("exactly once"));
}
