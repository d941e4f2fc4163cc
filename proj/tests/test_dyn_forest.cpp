#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "dyndom/connectivity.hpp"
#include "dyndom/graph.hpp"

using namespace dyndom;

namespace {

bool bfs_reaches(const DynGraph& g, VertexId from, VertexId to) {
  if (from == to) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (y == to) return true;
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

int bfs_components(const DynGraph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return comps;
}

// The maintained forest must be a spanning forest of the tracked graph:
// forest edges are tracked edges, and inside every component they form a tree
// reaching everyone.
void check_forest(const DynGraph& g, DynamicConnectivity& dc) {
  const int n = g.num_vertices();
  int forest_edges = 0;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : dc.forest_neighbors(v)) {
      CHECK(g.has_edge(v, w));
      CHECK(dc.tracked_neighbors(v).count(w) == 1);
      ++forest_edges;
    }
  }
  forest_edges /= 2;
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    int size = 1;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : dc.forest_neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          ++size;
          stack.push_back(y);
        }
      }
    }
    // everyone graph-reachable from s must be forest-reachable too
    int graph_size = 0;
    for (VertexId v = 0; v < n; ++v)
      if (bfs_reaches(g, s, v)) ++graph_size;
    CHECK(size == graph_size);
  }
  CHECK(forest_edges == n - comps);
  CHECK(dc.num_components() == comps);
  CHECK(comps == bfs_components(g));
}

}  // namespace

TEST_CASE("triangle: classification, replacement, split") {
  for (const auto backend : {ConnBackend::Naive, ConnBackend::Leveled}) {
    CAPTURE(static_cast<int>(backend));
    auto dc = DynamicConnectivity::make(backend, 4);
    CHECK(dc->num_components() == 4);
    CHECK(dc->insert_edge(0, 1) == DynamicConnectivity::InsertResult::BecameTree);
    CHECK(dc->insert_edge(1, 2) == DynamicConnectivity::InsertResult::BecameTree);
    CHECK(dc->insert_edge(0, 2) == DynamicConnectivity::InsertResult::NonTree);
    CHECK(dc->num_components() == 2);
    CHECK(dc->connected(0, 2));
    CHECK_FALSE(dc->connected(0, 3));

    auto r = dc->delete_edge(0, 1);
    CHECK(r.was_tree);
    CHECK_FALSE(r.split);
    REQUIRE(r.replacement.has_value());
    CHECK(*r.replacement == std::make_pair(VertexId{0}, VertexId{2}));
    CHECK(dc->connected(0, 1));

    r = dc->delete_edge(1, 2);
    CHECK(r.was_tree);
    CHECK(r.split);
    CHECK_FALSE(dc->connected(0, 1));
    CHECK(dc->num_components() == 3);

    r = dc->delete_edge(0, 2);
    CHECK(r.was_tree);
    CHECK(r.split);
    CHECK(dc->num_components() == 4);
  }
}

TEST_CASE("non-tree deletion changes nothing structural") {
  for (const auto backend : {ConnBackend::Naive, ConnBackend::Leveled}) {
    auto dc = DynamicConnectivity::make(backend, 3);
    dc->insert_edge(0, 1);
    dc->insert_edge(1, 2);
    dc->insert_edge(0, 2);
    const auto r = dc->delete_edge(0, 2);
    CHECK_FALSE(r.was_tree);
    CHECK_FALSE(r.split);
    CHECK_FALSE(r.replacement.has_value());
    CHECK(dc->connected(0, 2));
  }
}

TEST_CASE("distant replacement after a mid-path cut") {
  for (const auto backend : {ConnBackend::Naive, ConnBackend::Leveled}) {
    auto dc = DynamicConnectivity::make(backend, 5);
    for (int i = 0; i + 1 < 5; ++i) dc->insert_edge(i, i + 1);
    dc->insert_edge(0, 4);
    const auto r = dc->delete_edge(2, 3);
    CHECK(r.was_tree);
    REQUIRE(r.replacement.has_value());
    CHECK(*r.replacement == std::make_pair(VertexId{0}, VertexId{4}));
    CHECK(dc->connected(0, 4));
    CHECK(dc->is_tree_edge(0, 4));
  }
}

TEST_CASE("edge precondition errors") {
  auto dc = DynamicConnectivity::make(ConnBackend::Naive, 3);
  CHECK_THROWS_AS(dc->insert_edge(1, 1), Error);
  dc->insert_edge(0, 1);
  CHECK_THROWS_AS(dc->insert_edge(1, 0), Error);
  CHECK_THROWS_AS(dc->delete_edge(0, 2), Error);
  CHECK_THROWS_AS(dc->tree_path(0, 2), Error);  // disconnected
}

TEST_CASE("tree_path runs along forest edges") {
  for (const auto backend : {ConnBackend::Naive, ConnBackend::Leveled}) {
    auto dc = DynamicConnectivity::make(backend, 6);
    dc->insert_edge(0, 1);
    dc->insert_edge(1, 2);
    dc->insert_edge(2, 3);
    dc->insert_edge(1, 4);
    const auto p = dc->tree_path(0, 3);
    REQUIRE(p.size() == 4);
    CHECK(p.front() == 0);
    CHECK(p.back() == 3);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      CHECK(dc->forest_neighbors(p[i]).count(p[i + 1]) == 1);
    CHECK(dc->component_vertices(3) == std::vector<VertexId>{0, 1, 2, 3, 4});
  }
}

TEST_CASE("randomized parity with recomputation, both backends") {
  for (const auto backend : {ConnBackend::Naive, ConnBackend::Leveled}) {
    const int n = 24;
    DynGraph g(n);
    auto dc = DynamicConnectivity::make(backend, n);
    std::uint64_t x = 0x243F6A8885A308D3ull ^ static_cast<std::uint64_t>(backend);
    auto rnd = [&x]() {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      return x;
    };
    std::set<std::pair<VertexId, VertexId>> present;
    for (int step = 0; step < 4000; ++step) {
      const int dice = static_cast<int>(rnd() % 100);
      VertexId u = static_cast<VertexId>(rnd() % n);
      VertexId v = static_cast<VertexId>(rnd() % n);
      if (dice < 55 || present.empty()) {
        if (u == v || g.has_edge(u, v)) continue;
        g.insert_edge(u, v);
        dc->insert_edge(u, v);
        if (u > v) std::swap(u, v);
        present.insert({u, v});
      } else {
        auto it = present.begin();
        std::advance(it, static_cast<long>(rnd() % present.size()));
        auto [a, b] = *it;
        present.erase(it);
        g.delete_edge(a, b);
        dc->delete_edge(a, b);
      }
      for (int q = 0; q < 4; ++q) {
        const VertexId a = static_cast<VertexId>(rnd() % n);
        const VertexId b = static_cast<VertexId>(rnd() % n);
        CHECK(dc->connected(a, b) == bfs_reaches(g, a, b));
      }
      if (step % 50 == 0) check_forest(g, *dc);
    }
    check_forest(g, *dc);
  }
}
