#include <vector>

#include "doctest.h"
#include "dyndom/graph.hpp"
#include "dyndom/oracle.hpp"

using namespace dyndom;

namespace {
DynGraph path_graph(int n) {
  DynGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.insert_edge(i, i + 1);
  return g;
}

DynGraph cycle_graph(int n) {
  DynGraph g = path_graph(n);
  g.insert_edge(n - 1, 0);
  return g;
}

DynGraph star_graph(int n) {
  DynGraph g(n);
  for (int i = 1; i < n; ++i) g.insert_edge(0, i);
  return g;
}

DynGraph complete_graph(int n) {
  DynGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.insert_edge(i, j);
  return g;
}
}  // namespace

TEST_CASE("domination test") {
  const DynGraph star = star_graph(6);
  CHECK(oracle::is_dominating(star, {0}));
  CHECK_FALSE(oracle::is_dominating(star, {1}));  // leaf misses the other leaves
  std::vector<VertexId> all;
  for (int v = 0; v < 6; ++v) all.push_back(v);
  CHECK(oracle::is_dominating(star, all));
  const DynGraph empty(3);
  CHECK_FALSE(oracle::is_dominating(empty, {0}));
  CHECK(oracle::is_dominating(empty, {0, 1, 2}));
}

TEST_CASE("minimality test") {
  const DynGraph star = star_graph(6);
  CHECK(oracle::is_minimal_dominating(star, {0}));
  CHECK_FALSE(oracle::is_minimal_dominating(star, {0, 1}));
  const DynGraph c4 = cycle_graph(4);
  CHECK(oracle::is_minimal_dominating(c4, {0, 2}));
  CHECK(oracle::is_minimal_dominating(c4, {0, 1}));
  CHECK_FALSE(oracle::is_minimal_dominating(c4, {0, 1, 2}));
}

TEST_CASE("component counting") {
  DynGraph g(6);
  g.insert_edge(0, 1);
  g.insert_edge(2, 3);
  g.insert_edge(3, 4);
  CHECK(oracle::count_components(g) == 3);  // {0,1} {2,3,4} {5}
  const auto labels = oracle::component_labels(g);
  CHECK(labels[1] == 0);
  CHECK(labels[4] == 2);
  CHECK(labels[5] == 5);
}

TEST_CASE("removal component counts") {
  const DynGraph p3 = path_graph(3);
  const std::vector<VertexId> all = {0, 1, 2};
  CHECK(oracle::components_without_vertex(p3, all, 1) == 2);
  CHECK(oracle::components_without_vertex(p3, all, 0) == 1);
  CHECK(oracle::components_without_vertex(p3, {1}, 1) == 0);  // isolated
  CHECK(oracle::components_without_vertex(p3, {0, 2}, 0) == 0);
  CHECK_THROWS_AS(oracle::components_without_vertex(p3, {0, 2}, 1), Error);
}

TEST_CASE("exact minimum dominating set") {
  CHECK(oracle::exact_min_dominating_set(star_graph(6)) == std::vector<VertexId>{0});
  CHECK(oracle::exact_min_dominating_set(complete_graph(8)).size() == 1);
  const auto c5 = oracle::exact_min_dominating_set(cycle_graph(5));
  CHECK(c5.size() == 2);
  CHECK(c5 == std::vector<VertexId>{0, 2});  // lexicographically least witness
  const DynGraph empty(4);
  CHECK(oracle::exact_min_dominating_set(empty).size() == 4);
  CHECK_THROWS_AS(oracle::exact_min_dominating_set(DynGraph(21)), Error);
}

TEST_CASE("exact minimum connected dominating set") {
  CHECK(oracle::exact_min_connected_dominating_set(cycle_graph(5)).size() == 3);
  const auto p7 = oracle::exact_min_connected_dominating_set(path_graph(7));
  CHECK(p7 == std::vector<VertexId>{1, 2, 3, 4, 5});  // the interior
  CHECK(oracle::exact_min_connected_dominating_set(star_graph(6)) == std::vector<VertexId>{0});
  DynGraph one(1);
  CHECK(oracle::exact_min_connected_dominating_set(one) == std::vector<VertexId>{0});
  CHECK_THROWS_AS(oracle::exact_min_connected_dominating_set(DynGraph(2)), Error);  // disconnected
  CHECK_THROWS_AS(oracle::exact_min_connected_dominating_set(DynGraph(15)), Error);  // too large
}

TEST_CASE("greedy dominates and stays within the classical bound") {
  const auto c6 = oracle::greedy_dominating_set(cycle_graph(6));
  CHECK(c6 == std::vector<VertexId>{0, 3});
  for (int seed = 0; seed < 8; ++seed) {
    DynGraph g(11);
    // quick deterministic scramble
    std::uint64_t x = 88172645463325252ull + static_cast<std::uint64_t>(seed);
    auto next = [&x]() {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      return x;
    };
    for (int i = 0; i < 18; ++i) {
      const VertexId u = static_cast<VertexId>(next() % 11);
      const VertexId v = static_cast<VertexId>(next() % 11);
      if (u != v && !g.has_edge(u, v)) g.insert_edge(u, v);
    }
    const auto greedy = oracle::greedy_dominating_set(g);
    const auto exact = oracle::exact_min_dominating_set(g);
    CHECK(oracle::is_dominating(g, greedy));
    CHECK(greedy.size() >= exact.size());
    // H_11 < 3.02
    CHECK(static_cast<double>(greedy.size()) <= 3.02 * static_cast<double>(exact.size()));
  }
}

TEST_CASE("connector articulation oracle") {
  const DynGraph p5 = path_graph(5);
  // D = {0,2,4}, C = {1,3}: both connectors are articulation points of the backbone
  CHECK_FALSE(oracle::connectors_all_articulation(p5, {0, 2, 4}, {1, 3}).has_value());
  // a triangle member is never an articulation point
  const DynGraph k3 = complete_graph(3);
  const auto bad = oracle::connectors_all_articulation(k3, {0, 1}, {2});
  REQUIRE(bad.has_value());
  // overlap between the two sets is rejected
  CHECK(oracle::connectors_all_articulation(p5, {0, 1}, {1}).has_value());
}

TEST_CASE("backbone connectivity oracle") {
  DynGraph g(6);
  g.insert_edge(0, 1);
  g.insert_edge(1, 2);
  g.insert_edge(3, 4);
  // two graph components; backbone whole within each
  CHECK_FALSE(oracle::backbone_connected_per_component(g, {0, 2}, {1}).has_value());
  // backbone split inside the first component
  CHECK(oracle::backbone_connected_per_component(g, {0, 2}, {}).has_value());
  // second component's backbone is fine on its own
  CHECK_FALSE(oracle::backbone_connected_per_component(g, {3}, {}).has_value());
}
