#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "graphtherm/graph.hpp"

using namespace graphtherm;

namespace {

// Families exercised by the property-style loops below; three sizes each.
const std::vector<std::string> kFamilyDescriptors{
    "complete:4", "complete:9", "complete:16",
    "cycle:5", "cycle:12", "cycle:25",
    "path:4", "path:9", "path:16",
    "bipartite:2,3", "bipartite:4,4", "bipartite:5,11",
    "star:5", "star:10", "star:16",
    "grid:3x3:obc", "grid:4x5:obc", "grid:6x6:obc",
    "torus:3x3", "torus:4x4", "torus:5x6",
    "tri:3x3:obc", "tri:4x4:obc", "tri:5x5:obc",
    "tri:3x3:pbc", "tri:4x4:pbc", "tri:5x5:pbc",
    "honey:3x3:obc", "honey:4x4:obc", "honey:5x5:obc",
    "honey:4x4:pbc", "honey:4x6:pbc", "honey:6x6:pbc",
    "trsq:2x2:obc", "trsq:2x3:obc", "trsq:3x3:obc",
    "trsq:3x3:pbc", "trsq:3x4:pbc", "trsq:4x4:pbc",
    "prod(path:2,path:2)", "prod(path:3,cycle:4)", "prod(cycle:3,cycle:5)",
};

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  return {g.edges().begin(), g.edges().end()};
}

}  // namespace

TEST_CASE("descriptor parsing round-trips and rejects junk") {
  CHECK(parse_descriptor("complete:5").to_string() == "complete:5");
  CHECK(parse_descriptor("bipartite:2,3").to_string() == "bipartite:2,3");
  CHECK(parse_descriptor(" tri:4x4:pbc ").to_string() == "tri:4x4:pbc");
  CHECK(parse_descriptor("grid:3x4").to_string() == "grid:3x4:obc");
  // grid with periodic boundaries is the torus grid
  CHECK(parse_descriptor("grid:4x4:pbc").to_string() == "torus:4x4");
  CHECK(parse_descriptor("prod(path:2, cycle:3)").to_string() ==
        "prod(path:2,cycle:3)");

  CHECK_THROWS_AS(parse_descriptor("badname:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("cycle"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("cycle:-4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("cycle:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("bipartite:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("grid:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("grid:3x3:xbc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("prod(path:2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("prod(path:2,path:3"), std::invalid_argument);
}

TEST_CASE("graph constructor enforces simplicity") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  Graph g(4, {{2, 0}, {1, 3}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(g.family_name() == "custom");
}

TEST_CASE("complete graph has N(N-1)/2 edges and is regular") {
  Graph g = build_graph("complete:5");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 10);
  for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 4);
}

TEST_CASE("complete bipartite 2,3 matches the figure") {
  Graph g = build_graph("bipartite:2,3");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 6);
  std::vector<int> degrees;
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  CHECK(degrees == std::vector<int>{3, 3, 2, 2, 2});
}

TEST_CASE("3x3 open grid against a hand-enumerated edge set") {
  Graph g = build_graph("grid:3x3:obc");
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 12);
  std::set<std::pair<int, int>> expected{
      {0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8},   // rows
      {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}};  // columns
  CHECK(edge_set(g) == expected);
  CHECK(g.degree(0) == 2);  // corner
  CHECK(g.degree(4) == 4);  // center
}

TEST_CASE("star graph is the complete bipartite K_{1,N-1}") {
  Graph g = build_graph("star:10");
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 9);
  CHECK(g.degree(0) == 9);
  for (int v = 1; v < 10; ++v) CHECK(g.degree(v) == 1);
  CHECK(g.family_name() == "star:10");
}

TEST_CASE("family size preconditions") {
  CHECK_THROWS_AS(build_graph("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(build_graph("complete:1"), std::invalid_argument);
  CHECK_THROWS_AS(build_graph("path:1"), std::invalid_argument);
  CHECK_THROWS_AS(build_graph("grid:1x3:obc"), std::invalid_argument);
  // periodic sides below 3 would wrap onto duplicate edges
  CHECK_THROWS_AS(build_graph("torus:2x4"), std::invalid_argument);
  CHECK_THROWS_AS(build_graph("tri:2x5:pbc"), std::invalid_argument);
  // odd row count breaks the brick-wall parity at the periodic seam
  CHECK_THROWS_AS(build_graph("honey:5x4:pbc"), std::invalid_argument);
  CHECK_NOTHROW(build_graph("honey:4x5:pbc"));
}

TEST_CASE("P2 x P2 is the 4-cycle") {
  Graph g = cartesian_product(build_graph("path:2"), build_graph("path:2"));
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
  CHECK(is_connected(g));
  CHECK(g.family_name() == "prod(path:2,path:2)");
}

TEST_CASE("Pm x Pn is the open grid") {
  Graph product = cartesian_product(build_graph("path:3"), build_graph("path:4"));
  Graph grid = build_graph("grid:3x4:obc");
  CHECK(edge_set(product) == edge_set(grid));
}

TEST_CASE("C3 x C3 against direct edge enumeration") {
  Graph g = cartesian_product(build_graph("cycle:3"), build_graph("cycle:3"));
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 18);
  std::set<std::pair<int, int>> expected;
  auto add = [&](int a, int b) { expected.insert({std::min(a, b), std::max(a, b)}); };
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      add(3 * j + k, 3 * j + (k + 1) % 3);    // within the second factor
      add(3 * j + k, 3 * ((j + 1) % 3) + k);  // within the first factor
    }
  }
  CHECK(edge_set(g) == expected);
  for (int v = 0; v < 9; ++v) CHECK(g.degree(v) == 4);
}

TEST_CASE("product degrees add") {
  Graph g1 = build_graph("star:4");
  Graph g2 = build_graph("path:3");
  Graph p = cartesian_product(g1, g2);
  for (int j = 0; j < g1.order(); ++j) {
    for (int k = 0; k < g2.order(); ++k) {
      CHECK(p.degree(j * g2.order() + k) == g1.degree(j) + g2.degree(k));
    }
  }
}

TEST_CASE("degree statistics") {
  SUBCASE("cycle:5 is 2-regular") {
    auto stats = degree_stats(build_graph("cycle:5"));
    CHECK(stats.edge_count == 5);
    CHECK(stats.degree_sum == 10);
    CHECK(stats.degree_square_sum == 20);
  }
  SUBCASE("star sum of squared degrees is N(N-1)") {
    auto stats = degree_stats(build_graph("star:10"));
    CHECK(stats.degree_square_sum == 90);
  }
  SUBCASE("square open grid: sum d^2 = 4(4s^2 - 7s + 2)") {
    for (int side : {3, 4, 5}) {
      auto stats = degree_stats(build_graph(
          "grid:" + std::to_string(side) + "x" + std::to_string(side) + ":obc"));
      CHECK(stats.degree_square_sum == 4 * (4 * side * side - 7 * side + 2));
    }
  }
}

TEST_CASE("handshaking lemma holds for every family") {
  for (const auto& descriptor : kFamilyDescriptors) {
    CAPTURE(descriptor);
    auto stats = degree_stats(build_graph(descriptor));
    CHECK(stats.degree_sum == 2 * stats.edge_count);
  }
}

TEST_CASE("degree-square bounds hold, with equality where expected") {
  for (const auto& descriptor : kFamilyDescriptors) {
    CAPTURE(descriptor);
    Graph g = build_graph(descriptor);
    auto stats = degree_stats(g);
    const double n = g.order();
    const double m = static_cast<double>(stats.edge_count);
    const double sq = static_cast<double>(stats.degree_square_sum);
    CHECK(sq >= 4.0 * m * m / n - 1e-9);
    CHECK(sq <= m * (2.0 * m / (n - 1.0) + n - 2.0) + 1e-9);
  }
  SUBCASE("upper bound saturated exactly by complete graphs") {
    for (int n : {4, 9, 16}) {
      auto stats = degree_stats(build_graph("complete:" + std::to_string(n)));
      long long m = stats.edge_count;
      // M(2M/(N-1) + N - 2) cleared of the denominator
      CHECK(stats.degree_square_sum * (n - 1) ==
            m * (2 * m + (n - 2) * (n - 1)));
    }
  }
  SUBCASE("lower bound saturated exactly by regular graphs") {
    for (const std::string desc : {"cycle:12", "torus:4x4", "bipartite:4,4"}) {
      Graph g = build_graph(desc);
      auto stats = degree_stats(g);
      CHECK(g.order() * stats.degree_square_sum ==
            4 * stats.edge_count * stats.edge_count);
    }
  }
}

TEST_CASE("circulant labeling detection") {
  CHECK(is_circulant_labeled(build_graph("cycle:7")));
  CHECK(is_circulant_labeled(build_graph("complete:6")));
  CHECK_FALSE(is_circulant_labeled(build_graph("path:5")));
  CHECK_FALSE(is_circulant_labeled(build_graph("grid:3x3:obc")));
  // canonical block labeling of K_{3,3} is not circulant...
  CHECK_FALSE(is_circulant_labeled(build_graph("bipartite:3,3")));
  // ...but the alternating labeling (i ~ j iff i+j odd) is
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if ((i + j) % 2 == 1) edges.emplace_back(i, j);
    }
  }
  CHECK(is_circulant_labeled(Graph(6, edges)));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(build_graph("path:4")));
  CHECK(is_connected(build_graph("torus:3x3")));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("every built family is connected") {
  for (const auto& descriptor : kFamilyDescriptors) {
    CAPTURE(descriptor);
    CHECK(is_connected(build_graph(descriptor)));
  }
}

TEST_CASE("edge list round trip") {
  Graph g = build_graph("bipartite:2,3");
  std::stringstream stream;
  write_edge_list(g, stream);
  Graph back = read_edge_list(stream);
  CHECK(back.order() == g.order());
  CHECK(edge_set(back) == edge_set(g));
  CHECK(back.family_name() == "custom");

  std::stringstream bad("4\n0 1\n2");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
  std::stringstream worse("x");
  CHECK_THROWS_AS(read_edge_list(worse), std::invalid_argument);
}

TEST_CASE("lattice degree profiles match their tilings") {
  Graph tri = build_graph("tri:4x4:pbc");
  for (int v = 0; v < tri.order(); ++v) CHECK(tri.degree(v) == 6);
  Graph honey = build_graph("honey:4x4:pbc");
  for (int v = 0; v < honey.order(); ++v) CHECK(honey.degree(v) == 3);
  Graph trsq = build_graph("trsq:3x3:pbc");
  CHECK(trsq.order() == 36);
  for (int v = 0; v < trsq.order(); ++v) CHECK(trsq.degree(v) == 3);
  // interior vertices of the open patches
  CHECK(build_graph("tri:4x4:obc").degree(1 * 4 + 1) == 6);
  CHECK(build_graph("honey:4x4:obc").degree(1 * 4 + 1) == 3);
}
