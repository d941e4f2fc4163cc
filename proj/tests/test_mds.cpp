#include <vector>

#include "doctest.h"
#include "dyndom/graph.hpp"
#include "dyndom/mds.hpp"
#include "dyndom/oracle.hpp"
#include "dyndom/trace.hpp"

using namespace dyndom;

namespace {
void checked(const DynGraph& g, const LevelSolution& sol) {
  const auto err = oracle::check_level_solution(g, sol);
  if (err) FAIL(*err);
}
}  // namespace

TEST_CASE("level helpers") {
  CHECK(level_cap_for(1) == 10);
  CHECK(level_cap_for(2) == 11);
  CHECK(level_cap_for(64) == 16);
  CHECK(level_cap_for(100) == 17);
  CHECK(lowest_level(1) == 1);
  CHECK(lowest_level(2) == 1);
  CHECK(lowest_level(3) == 2);
  CHECK(lowest_level(8) == 3);
  CHECK(lowest_level(9) == 4);
  CHECK(highest_level(1, 16) == 10);
  CHECK(highest_level(2, 16) == 11);
  CHECK(highest_level(3, 16) == 11);
  CHECK(highest_level(64, 16) == 16);
  CHECK(highest_level(1024, 16) == 16);  // clamped at the cap
}

TEST_CASE("empty graph: everyone dominates itself at level 1") {
  DynGraph g(5);
  LevelSolution sol(5);
  checked(g, sol);
  CHECK(sol.ds_size() == 5);
  for (VertexId v = 0; v < 5; ++v) {
    CHECK(sol.in_ds(v));
    CHECK(sol.level_of(v) == 1);
  }
  CHECK(sol.level_changes() == 0);
  CHECK(sol.membership_changes() == 0);
}

TEST_CASE("star build-up concentrates domination") {
  const int n = 20;
  DynGraph g(n);
  LevelSolution sol(n);
  for (VertexId leaf = 1; leaf < n; ++leaf) {
    g.insert_edge(0, leaf);
    sol.insert_edge(g, 0, leaf);
    checked(g, sol);
  }
  // the hub ends up dominating nearly everything
  CHECK(sol.ds_size() < n / 2);
  CHECK(sol.in_ds(0));
  CHECK(sol.membership_changes() <= sol.level_changes());
}

TEST_CASE("deleting an edge recreates the dominated endpoint as a singleton") {
  const int n = 12;
  DynGraph g(n);
  LevelSolution sol(n);
  for (VertexId leaf = 1; leaf < n; ++leaf) {
    g.insert_edge(0, leaf);
    sol.insert_edge(g, 0, leaf);
  }
  checked(g, sol);
  // find a leaf dominated by the hub rather than by itself
  VertexId victim = -1;
  for (VertexId leaf = 1; leaf < n; ++leaf) {
    const auto& pair = sol.pairs().at(sol.owner_pair(leaf));
    if (pair.dominant != leaf) {
      victim = leaf;
      break;
    }
  }
  REQUIRE(victim != -1);
  g.delete_edge(0, victim);
  sol.delete_edge(g, 0, victim);
  checked(g, sol);
  CHECK(sol.in_ds(victim));
  CHECK(sol.level_of(victim) == 1);
  const auto& own = sol.pairs().at(sol.owner_pair(victim));
  CHECK(own.dominant == victim);
  CHECK(own.dom.size() == 1);
}

TEST_CASE("complete graph stays valid through build and teardown") {
  const int n = 8;
  DynGraph g(n);
  LevelSolution sol(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      g.insert_edge(u, v);
      sol.insert_edge(g, u, v);
      checked(g, sol);
    }
  CHECK(sol.ds_size() < n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      g.delete_edge(u, v);
      sol.delete_edge(g, u, v);
      checked(g, sol);
    }
  CHECK(sol.ds_size() == n);  // everyone is a singleton again
}

TEST_CASE("randomized replay keeps every invariant") {
  for (const auto& [n, pdel, seed] :
       std::vector<std::tuple<int, double, unsigned>>{{6, 0.3, 1}, {13, 0.45, 2}, {25, 0.6, 3}}) {
    const UpdateTrace t = generate_trace(n, 600, pdel, seed);
    DynGraph g(n);
    LevelSolution sol(n);
    for (const auto& e : t.events) {
      g.apply(e);
      if (e.kind == EventKind::Insert)
        sol.insert_edge(g, e.u, e.v);
      else
        sol.delete_edge(g, e.u, e.v);
      checked(g, sol);
      CHECK(sol.membership_changes() <= sol.level_changes());
    }
  }
}

TEST_CASE("membership listener reports every transition") {
  const int n = 10;
  DynGraph g(n);
  LevelSolution sol(n);
  std::vector<char> shadow(n, 1);  // everyone starts in the set
  sol.set_change_listener([&](DsChange c, VertexId v) {
    if (c == DsChange::Entered) {
      CHECK_FALSE(shadow[v]);
      shadow[v] = 1;
    } else {
      CHECK(shadow[v]);
      shadow[v] = 0;
    }
  });
  const UpdateTrace t = generate_trace(n, 400, 0.4, 77);
  for (const auto& e : t.events) {
    g.apply(e);
    if (e.kind == EventKind::Insert)
      sol.insert_edge(g, e.u, e.v);
    else
      sol.delete_edge(g, e.u, e.v);
    for (VertexId v = 0; v < n; ++v) CHECK(static_cast<bool>(shadow[v]) == sol.in_ds(v));
  }
}
